#include <cstdio>
#include <map>
#include <vector>

#include "stokescluster/ugaglia.hpp"

using namespace sc;

int main() {
    int n = 3;
    UgagliaData d = build_ugaglia(n);
    LogCanonicalForm direct = ugaglia_graph_form(d);
    LogCanonicalForm assembly = ugaglia_form(n);
    FormBracket fbd(direct), fba(assembly);
    std::vector<std::pair<int, int>> ps{{1, 2}, {1, 3}, {2, 3}};
    std::map<VarId, RationalFunction> img;
    for (const auto& p : ps)
        img[ugaglia_s_var(p.first, p.second)] = d.S.at(p.first - 1, p.second - 1);
    PoissonStructure ug = ugaglia_bracket(n);
    for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = a + 1; b < ps.size(); ++b) {
            RationalFunction f = d.S.at(ps[a].first - 1, ps[a].second - 1);
            RationalFunction g = d.S.at(ps[b].first - 1, ps[b].second - 1);
            RationalFunction ld = fbd(f, g), la = fba(f, g);
            RationalFunction r = ug.pi[a][b].substitute(img);
            std::printf("pair {%d%d,%d%d}\n", ps[a].first, ps[a].second, ps[b].first,
                        ps[b].second);
            std::printf("  direct   = %s\n", ld.to_string().c_str());
            std::printf("  assembly = %s\n", la.to_string().c_str());
            std::printf("  ugp      = %s\n", r.to_string().c_str());
            if (!r.is_zero()) {
                RationalFunction qd = ld * r.inverse(), qa = la * r.inverse();
                std::printf("  direct/ugp   = %s\n",
                            qd.is_constant() ? qd.to_string().c_str() : "NONCONST");
                std::printf("  assembly/ugp = %s\n",
                            qa.is_constant() ? qa.to_string().c_str() : "NONCONST");
            }
        }
    return 0;
}
