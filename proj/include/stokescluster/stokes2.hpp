#ifndef STOKESCLUSTER_STOKES2_HPP
#define STOKESCLUSTER_STOKES2_HPP

#include "stokescluster/compare.hpp"
#include "stokescluster/form.hpp"
#include "stokescluster/poisson.hpp"
#include "stokescluster/polygon.hpp"
#include "stokescluster/report.hpp"

namespace sc {

// Ray parameters and formal monodromy scale solved from the vertex relations
// of a triangulation's jump graph, together with the perimeter jump scalars.
struct StokesData {
    int K = 0;
    std::vector<RationalFunction> s;   // s_1..s_{2K+2}, index l-1
    RationalFunction lambda;
    std::vector<RationalFunction> chi; // perimeter scalars, index l-1; chi_1 = y_1
};

// Sequential solve around the polygon; throws TriangularityViolated when a
// required matrix entry fails to vanish identically.
StokesData stokes_matrices(const Triangulation& t);

// Closed forms for the fan triangulation.
StokesData fan_closed_form(int K);

MatrixRF stokes_matrix(const StokesData& d, int l); // unitriangular S_l
MatrixRF lambda_matrix(const StokesData& d);        // diag(lambda, 1/lambda)

MatrixRF jump_v(const RationalFunction& p); // [[0, -p], [1/p, 0]]
MatrixRF jump_d(const RationalFunction& x); // diag(1/x, x)
MatrixRF corner_matrix();                   // [[0, 1], [-1, -1]], cube is 1

// Full jump graph of the triangulation: perimeter, triangle centers,
// diagonals, and rays carrying the solved matrices (the last ray carries
// S_{2K+2} times the monodromy scale). Passes validate().
JumpGraph polygon_graph(const Triangulation& t, const StokesData& d);

// One central vertex with the ray jumps only; the monodromy scale rides on
// its own ray or merges into the last one.
JumpGraph star_graph(const StokesData& d, bool merged_lambda_ray);

struct FormData {
    StokesData data;
    TwoForm omega;
    LogCanonicalForm half; // omega / 2 over the slot variables
    PoissonStructure poisson;
};

FormData stokes_form(const Triangulation& t);

// Images of the squared slot variables of flip(t, slot) inside the squared
// slot variables of t: conjugate the quiver by the slot-1 sign flip, invert
// the first seed entry, mutate at the flipped slot, invert back.
std::vector<RationalFunction> flip_square_images(const Triangulation& t, int slot);

void check_monodromy(int K, std::vector<CheckItem>& items);
void check_form(const Triangulation& t, bool expect_fan_pattern,
                std::vector<CheckItem>& items);
void check_fn_pushforward(int K, Comparer& cmp, std::vector<CheckItem>& items);
void check_flip_mutation(const Triangulation& t, int slot, Comparer& cmp,
                         std::vector<CheckItem>& items);
void check_fn_ideal(int K, bool jacobi_symbolic, int corank_points,
                    unsigned long long seed, std::vector<CheckItem>& items);

} // namespace sc

#endif
