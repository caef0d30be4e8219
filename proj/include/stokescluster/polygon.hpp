#ifndef STOKESCLUSTER_POLYGON_HPP
#define STOKESCLUSTER_POLYGON_HPP

#include <array>
#include <optional>

#include "stokescluster/cluster.hpp"

namespace sc {

// Triangulation of a convex (2K+2)-gon with vertices numbered 1..2K+2
// counterclockwise. Perimeter side l joins v_l -> v_{l+1} (side 2K+2 wraps);
// side 1 is distinguished and carries the slot-1 variable. Each diagonal
// occupies a slot in 2..2K; the slot indexes the quiver vertex and the
// variable family, and survives flips with a bumped generation counter.
class Triangulation {
public:
    struct DiagonalData {
        int a, b;                 // endpoints, a < b
        int slot;                 // 2..2K
        std::string base;         // label family name
        int generation;           // 0 for the original label
        std::pair<int, int> orientation; // (tail, head) = {a, b}
    };

    int K = 0;
    std::vector<DiagonalData> diagonals; // sorted by slot
    std::string boundary_base = "y1";

    int side_count() const { return 2 * K + 2; }
    std::string label_name(int slot) const;
    VarId label_var(int slot) const;
    VarId boundary_var() const;
    const DiagonalData& diagonal(int slot) const;
    std::optional<int> slot_of(int a, int b) const;
    bool has_edge(int a, int b) const; // perimeter side or diagonal
    std::vector<int> slots_at(int vertex) const; // sorted by slot
    void validate() const;
};

Triangulation fan_triangulation(int K);

// Custom triangulation; entries are (a, b, slot) with default base "y<slot>"
// and orientation a -> b.
Triangulation make_triangulation(int K, const std::vector<std::array<int, 3>>& diags);

// All triangular faces as sorted triples.
std::vector<std::array<int, 3>> triangles_of(const Triangulation& t);

// Replaces the slot diagonal by the opposite diagonal of its quadrilateral;
// the slot keeps its family name with generation + 1.
Triangulation flip(const Triangulation& t, int slot);

// 4 minus the number of perimeter sides of the flip quadrilateral.
int classify_flip(const Triangulation& t, int slot);

// Quiver on slots 1..2K (vertex index slot-1). Each triangle contributes,
// for every cyclically consecutive pair of counterclockwise boundary edges
// that both carry slot variables, an arrow from the later carrier to the
// earlier one; afterwards all arrows at slot 1 are reversed.
Quiver quiver_of(const Triangulation& t);

// Perimeter side monomials x_1..x_{2K+2} (index l-1), products of slot
// variables determined by which diagonals meet the sweep vertex:
//   x_1 = y_1,
//   x_l = y_1 * prod_{k=2}^{l} prod_{slots at v_k} y_slot^{(-1)^{k+1}}  (l <= 2K+1),
//   x_{2K+2} = y_1 * prod_{slots at v_1} y_slot^{-1}.
std::vector<RationalFunction> x_variables(const Triangulation& t);

std::string triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const std::string& text);

} // namespace sc

#endif
