#include <cstdio>
#include <string>

#include "stokescluster/ugaglia.hpp"

using namespace sc;

static void print_lc(const LogCanonicalForm& lc, const char* tag) {
    std::printf("%s over", tag);
    for (VarId v : lc.vars) std::printf(" %s", VarRegistry::instance().name(v).c_str());
    std::printf("\n");
    for (std::size_t i = 0; i < lc.vars.size(); ++i) {
        for (std::size_t j = 0; j < lc.vars.size(); ++j)
            std::printf(" %8s", lc.coeff[i][j].get_str().c_str());
        std::printf("\n");
    }
}

int main() {
    for (int n : {2, 3}) {
        std::printf("===== n=%d =====\n", n);
        UgagliaData d = build_ugaglia(n);
        std::printf("order=%s sign=%d\n", d.q0_order.c_str(), d.s_sign);
        LogCanonicalForm direct = ugaglia_graph_form(d);
        print_lc(direct, "direct");
        if (n >= 3) print_lc(ugaglia_form(n), "assembly");

        // bracket on s-entries vs Ugaglia pattern, for S and S^{-1}
        try {
            FormBracket fb(direct);
            MatrixRF si = d.S.inverse();
            for (int which = 0; which < 2; ++which) {
                const MatrixRF& m = which ? si : d.S;
                std::printf("%s entries:\n", which ? "S^{-1}" : "S");
                if (n < 3) continue;
                std::vector<std::pair<int, int>> ps;
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j) ps.push_back({i, j});
                PoissonStructure ug = ugaglia_bracket(n);
                for (std::size_t a = 0; a < ps.size(); ++a)
                    for (std::size_t b = a + 1; b < ps.size(); ++b) {
                        RationalFunction lhs = fb(m.at(ps[a].first - 1, ps[a].second - 1),
                                                  m.at(ps[b].first - 1, ps[b].second - 1));
                        RationalFunction rhs = ug.pi[a][b];
                        // substitute s_ij -> entries
                        std::map<VarId, RationalFunction> img;
                        for (const auto& p : ps)
                            img[ugaglia_s_var(p.first, p.second)] =
                                m.at(p.first - 1, p.second - 1);
                        RationalFunction r = rhs.substitute(img);
                        if (r.is_zero()) {
                            std::printf("  {%d%d,%d%d}: rhs=0 lhs_zero=%d\n", ps[a].first,
                                        ps[a].second, ps[b].first, ps[b].second,
                                        (int)lhs.is_zero());
                        } else {
                            RationalFunction ratio = lhs * r.inverse();
                            std::printf("  {%d%d,%d%d}: ratio=%s\n", ps[a].first, ps[a].second,
                                        ps[b].first, ps[b].second,
                                        ratio.is_constant() ? ratio.to_string().c_str()
                                                            : "NONCONST");
                        }
                    }
            }
        } catch (const Error& e) {
            std::printf("bracket failed: %s\n", e.what());
        }
    }
    return 0;
}
