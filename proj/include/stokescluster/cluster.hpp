#ifndef STOKESCLUSTER_CLUSTER_HPP
#define STOKESCLUSTER_CLUSTER_HPP

#include "stokescluster/rational.hpp"

namespace sc {

// Skew integer exchange matrix: at(k,l) = #arrows(k->l) - #arrows(l->k).
// Vertex 0 is the distinguished one (the boundary-edge variable slot).
class Quiver {
public:
    explicit Quiver(std::size_t n);
    static Quiver dynkin_a(std::size_t n); // oriented path 1 -> 2 -> ... -> n

    std::size_t size() const { return n_; }
    long at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, long v); // sets (i,j) and -(j,i)
    void add_arrow(std::size_t from, std::size_t to);

    // Standard matrix mutation at vertex k.
    Quiver mutate_plain(std::size_t k) const;
    // Mutation transported through the distinguished-vertex sign flip:
    // sigma mutate_plain(sigma B sigma) sigma with sigma = diag(-1,1,...,1).
    Quiver mutate(std::size_t k) const;
    // -sigma B sigma; mutate_plain on the hatted matrix tracks mutate on the
    // original, so hatted seeds mutate with the standard rule.
    Quiver hatted() const;

    bool operator==(const Quiver& o) const { return b_ == o.b_; }
    bool is_dynkin_a() const;
    std::string to_string() const;
    const std::vector<std::vector<long>>& matrix() const { return b_; }

private:
    std::size_t n_;
    std::vector<std::vector<long>> b_;
};

// Quiver plus one coefficient per vertex.
struct YSeed {
    Quiver quiver;
    std::vector<RationalFunction> y;
};

// Coefficient mutation at vertex k (column reading of B):
//   y_k -> 1/y_k,   y_i -> y_i y_k^{[B_ik]+} (1+y_k)^{-B_ik}  (i != k),
// with the quiver updated by the standard matrix mutation.
YSeed y_seed_mutation(const YSeed& s, std::size_t k);

} // namespace sc

#endif
