#ifndef STOKESCLUSTER_POISSON_HPP
#define STOKESCLUSTER_POISSON_HPP

#include "stokescluster/form.hpp"

namespace sc {

// Coordinate Poisson structure: pi[i][j] = {coords[i], coords[j]} as a
// rational function of the coordinates; pi is skew.
struct PoissonStructure {
    std::vector<VarId> coords;
    std::vector<std::vector<RationalFunction>> pi;
};

// Inverse-transpose of the constant log-canonical coefficient matrix, put
// back in coordinates: {v_i, v_j} = P_ij v_i v_j with P = C^{-T}.
// Throws DegenerateForm when C is singular.
PoissonStructure poisson_from_form(const LogCanonicalForm& lc);

RationalFunction bracket(const PoissonStructure& p, const RationalFunction& f,
                         const RationalFunction& g);
RationalFunction jacobiator(const PoissonStructure& p, const RationalFunction& f,
                            const RationalFunction& g, const RationalFunction& h);
bool is_casimir(const PoissonStructure& p, const RationalFunction& f);
std::size_t rank_at(const PoissonStructure& p, const std::map<VarId, mpq_class>& point);

// Flaschka-Newell bracket on the Stokes entries s_1..s_{2K+2} and the
// formal-monodromy eigenvalue lambda:
//   {s_j, s_l} = delta_{j,l-1} - delta_{j,1} delta_{l,2K+2} / lambda^2
//                + (-1)^{j-l+1} s_j s_l          (j < l)
//   {s_j, lambda} = (-1)^j s_j lambda.
PoissonStructure fn_structure(int K);

// Variable names used by fn_structure.
VarId fn_s_var(int j);
VarId fn_lambda_var();

// Inverse-transpose of an exact rational matrix; throws DegenerateForm.
std::vector<std::vector<mpq_class>> inverse_transpose_q(
    const std::vector<std::vector<mpq_class>>& m);

} // namespace sc

#endif
