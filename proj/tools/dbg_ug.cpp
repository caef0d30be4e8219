#include <cstdio>

#include "stokescluster/ugaglia.hpp"

using namespace sc;

int main() {
    for (int n = 2; n <= 3; ++n) {
        UgagliaData d = build_ugaglia(n);
        std::printf("n=%d order=[%s] all=[", n, d.q0_order.c_str());
        for (const auto& o : d.q0_orders_passing) std::printf("%s; ", o.c_str());
        std::printf("] sign=%d m=%s\n", d.s_sign, d.m_formula.c_str());
        MatrixRF ev = ugaglia_eigenvalues(d);
        for (int j = 0; j < n; ++j)
            std::printf("  lam[%d] = %s   closed = %s\n", j,
                        d.Lambda.at(j, j).to_string().c_str(),
                        ev.at(j, j).to_string().c_str());
        if (n == 3) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    std::printf("  S[%d][%d] = %s\n", i, j, d.S.at(i, j).to_string().c_str());
            LogCanonicalForm lc = ugaglia_form(3);
            std::printf("  form C =\n");
            for (const auto& row : lc.coeff) {
                std::printf("   ");
                for (const auto& c : row) std::printf(" %6s", c.get_str().c_str());
                std::printf("\n");
            }
            FormBracket fb(lc);
            std::map<VarId, RationalFunction> subs;
            for (int i = 1; i <= 3; ++i)
                for (int j = i + 1; j <= 3; ++j)
                    subs[ugaglia_s_var(i, j)] = d.S.at(i - 1, j - 1);
            PoissonStructure ups = ugaglia_bracket(3);
            for (std::size_t p = 0; p < 3; ++p)
                for (std::size_t q = p + 1; q < 3; ++q) {
                    RationalFunction lhs = fb(subs.at(ups.coords[p]), subs.at(ups.coords[q]));
                    RationalFunction rhs = ups.pi[p][q].substitute(subs);
                    std::printf("  pair %zu %zu: lhs = %s\n        rhs = %s\n", p, q,
                                lhs.to_string().c_str(), rhs.to_string().c_str());
                }
        }
    }
    return 0;
}
