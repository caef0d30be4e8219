#ifndef STOKESCLUSTER_SLNCORE_HPP
#define STOKESCLUSTER_SLNCORE_HPP

#include <map>
#include <vector>

#include "stokescluster/matrix.hpp"

namespace sc {

// Index triple (a,b,c) of positive integers with a+b+c = n.
struct TripleIndex {
    int a = 0, b = 0, c = 0;
    bool operator==(const TripleIndex& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const TripleIndex& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

// All triples for rank n in lexicographic order; count (n-1)(n-2)/2.
std::vector<TripleIndex> triple_indices(int n);

// Interns one variable "x<a><b><c>" per triple. exponent_scale = 2 lets the
// same symbols carry the half-integer powers used downstream.
std::map<TripleIndex, VarId> triple_vars(int n, int exponent_scale = 2);

// Simple positive roots alpha_i = diag(0,..,1,-1,..,0) and dual roots
// h_i = (n-i)1_i (+) -i 1_{n-i}, stored as diagonals, together with the
// all-ones antidiagonal involution P and the parity matrix sigma.
struct CartanData {
    int n = 0;
    std::vector<std::vector<long>> alpha; // alpha[i-1], i = 1..n-1
    std::vector<std::vector<long>> h;     // h[i-1], i = 1..n-1
    MatrixRF P;                           // P_{j, n+1-j} = 1
    MatrixRF sigma;                       // diag(1,-1,1,...)
};

// Throws Error unless n >= 2. Validates Tr(alpha_i h_k) = n delta_ik.
CartanData cartan_data(int n);

// diag(x^{d_1}, ..., x^{d_n}) with exposed integer powers d_j.
MatrixRF var_diag_power(VarId x, const std::vector<long>& d);

// diag(x^{d_1/2}, ..., x^{d_n/2}): exposed half powers. Requires x to have
// exponent scale 2 or every d_j even.
MatrixRF var_diag_half_power(VarId x, const std::vector<long>& d);

// Sum of products of two diagonals: Tr(diag(u) diag(v)).
long diag_trace_product(const std::vector<long>& u, const std::vector<long>& v);

// Diagonal of diag(d) conjugated by the antidiagonal involution (reversal).
std::vector<long> star_diag(const std::vector<long>& d);

// Fock-Goncharov triangle matrix A_which (which in {1,2,3}) for SL_n:
//   A_1 = sigma (N_{n-1} ... N_1) P,
//   N_k = (prod_{k<=i<=n-2} x_{n-i-1, i-k+1, k}^{-h_{i+1}} F_i) F_{n-1},
//   F_i = 1 + E_{i+1,i},
// with A_2 and A_3 reading the variables through the cyclic index shifts
// (a,b,c) -> (c,a,b) and (a,b,c) -> (b,c,a): the direction that makes the
// triple product A_1 A_2 A_3 the identity. The map x supplies the variable
// for each triple; exponents are exposed powers regardless of variable scale.
MatrixRF a_matrix(int n, int which, const std::map<TripleIndex, VarId>& x);

// Same construction with the antidiagonal replaced by the signed variant
// P_{j, n+1-j} = signs[j-1]; used to probe sign conventions.
MatrixRF a_matrix_signed(int n, int which, const std::map<TripleIndex, VarId>& x,
                         const std::vector<int>& signs);

// Conjugation by the antidiagonal involution: M -> P M P^{-1}.
// Throws ShapeMismatch unless M is n x n.
MatrixRF star_matrix(const MatrixRF& M, int n);

} // namespace sc

#endif
