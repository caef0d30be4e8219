#ifndef STOKESCLUSTER_UGAGLIA_HPP
#define STOKESCLUSTER_UGAGLIA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stokescluster/compare.hpp"
#include "stokescluster/poisson.hpp"
#include "stokescluster/report.hpp"
#include "stokescluster/slncore.hpp"

namespace sc {

// Jump data of the one-puncture SL_n Stokes graph with two Stokes rays,
// two triangle vertices and a Fuchsian point: triangle matrices A_1..A_3,
// the torus jump D, the antidiagonal gauge Q, the solved Stokes matrix S,
// the local monodromy M0 = D^{-1} A2 D A2^{-t} and its diagonal Lambda.
struct UgagliaData {
    int n = 0;
    std::map<TripleIndex, VarId> x;   // half-exponent symbols x_abc
    std::vector<VarId> z;             // half-exponent symbols z_1..z_{n-1}
    std::vector<VarId> c;             // toric diagonal symbols c_1..c_{floor(n/2)}
    MatrixRF A1, A2, A3, D, Q, S, M0, Lambda;
    std::string q0_order;             // adopted middle factor order at the Stokes vertex
    std::vector<std::string> q0_orders_passing;
    int s_sign = 1;                   // sign making the solved S unit on the diagonal
    std::string m_formula;            // monodromy product matching the conjugated form
};

// Builds all jump matrices for rank n and solves S from the vertex relation
//   S * Q * X * Y * Z * Q^t = sign * 1
// at the irregular vertex, searching the orders of (A1, D, A3^{-t}) and the
// sign for the unique unit-upper-triangular solution. Q = W * P is derived
// from the same relation: the unit diagonal of S forces the square of each
// diagonal entry of W, and positive roots are taken. Throws
// TriangularityViolated when no order works or M0 is not lower triangular;
// ResonantEigenvalues when two eigenvalues coincide identically.
UgagliaData build_ugaglia(int n);

// Entrywise closed form of the eigenvalue diagonal:
//   Lambda_j = (-1)^{n+1} prod_l z_l^{(alpha_l - alpha_l*)_jj}
//              prod_t x_t^{(h_b - h_b*)_jj}.
MatrixRF ugaglia_eigenvalues(const UgagliaData& d);

// Gram pairing of the dual roots: Tr(h_j h_k) = n^2 min(j,k) - n j k.
long gram_hh(int n, int j, int k);

// Integer coefficient of d xi_t ^ d xi_u in the triangle-vertex two-form:
// three Heaviside-gated Gram differences over the cyclically paired slots.
long f_coefficient(int n, const TripleIndex& t, const TripleIndex& u);

// The log coordinates of the form, in order: xi_abc (triples in
// lexicographic order), zeta_1..zeta_{n-1}, gamma_1..gamma_{floor(n/2)}.
std::vector<VarId> ugaglia_coords(int n);

// Constant skew matrix of Omega(Sigma) = 2 w_f + 2 w_{q0} + w_beta + w_s
// over ugaglia_coords(n); every printed term c dv_p ^ dv_q accumulates
// skew-symmetrically. Throws DegenerateForm when singular.
LogCanonicalForm ugaglia_form(int n);

// Coefficient matrix of the jump graph two-form over ugaglia_coords(n) in
// exposed units, evaluated exactly at a random rational point drawn from the
// seed; resonant points are redrawn. The matrix is constant, so any
// admissible point reproduces the symbolic result.
std::vector<std::vector<mpq_class>> ugaglia_graph_form_at(const JumpGraph& g, int n,
                                                          std::uint64_t seed);

// Lower-triangular diagonalizer of M0: column j is the eigenvector for the
// j-th diagonal entry of M0, normalized so that its j-th entry is the toric
// variable c_j (with c_{n+1-j} = 1/c_j and a unit middle entry for odd n).
MatrixRF ugaglia_c0(const UgagliaData& d);

// The full jump graph of the construction: irregular vertices q0/q1 with the
// Stokes rays, triangle vertices f0/f1, the lattice vertex s, and the
// diagonalization vertex beta carrying the C0 loop and the branch ray.
// Every vertex relation is validated.
JumpGraph ugaglia_graph(const UgagliaData& d);

// Two-form of the jump graph, reduced to constant dlog coefficients over
// the (x, z, c) torus coordinates of ugaglia_coords. This is the form
// computed from first principles; ugaglia_form is the closed-sum
// presentation.
LogCanonicalForm ugaglia_graph_form(const UgagliaData& d);

// Bracket induced by a constant log-canonical form: Pi = C^{-T} contracted
// with scale-aware logarithmic derivatives.
class FormBracket {
public:
    explicit FormBracket(const LogCanonicalForm& lc);
    RationalFunction operator()(const RationalFunction& f, const RationalFunction& g) const;

private:
    std::vector<VarId> vars_;
    std::vector<std::vector<mpq_class>> pi_;
};

// Quadratic bracket on the upper-triangular entries s_ij, i < j <= n.
PoissonStructure ugaglia_bracket(int n);

// Variable for the bracket coordinate s_ij.
VarId ugaglia_s_var(int i, int j);

// Full verification: build, triangularity, vertex relations, eigenvalue
// closed form and symmetry, nondegeneracy of the form, the -8 bracket
// ratio on all s-pairs, eigenvalue Casimirs, gamma absence.  The bracket
// comes from the jump-graph form, symbolically for n <= 3 and from exact
// random-point evaluation (derived from seed) for larger n.
void check_ugaglia(int n, Comparer& cmp, std::vector<CheckItem>& items,
                   std::map<std::string, std::string>& conventions, std::uint64_t seed = 0);

} // namespace sc

#endif
