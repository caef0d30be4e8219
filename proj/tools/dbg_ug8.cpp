#include <chrono>
#include <cstdio>
#include <map>
#include <vector>

#include "stokescluster/ugaglia.hpp"

using namespace sc;

static double ms(std::chrono::steady_clock::time_point a,
                 std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 4;
    auto t0 = std::chrono::steady_clock::now();
    UgagliaData d = build_ugaglia(n);
    auto t1 = std::chrono::steady_clock::now();
    std::printf("build: %.0fms order=%s sign=%d m_formula=%s\n", ms(t0, t1), d.q0_order.c_str(),
                d.s_sign, d.m_formula.c_str());

    // eigenvalue reversal: diag(M0)[n+1-j] == closed[j], and m_j*m_{n+1-j}==1
    MatrixRF closed = ugaglia_eigenvalues(d);
    bool rev = true, sym = true;
    std::size_t un = static_cast<std::size_t>(n);
    for (std::size_t j = 0; j < un; ++j) {
        rev = rev && rf_equal(d.M0.at(un - 1 - j, un - 1 - j), closed.at(j, j));
        sym = sym && (d.M0.at(j, j) * d.M0.at(un - 1 - j, un - 1 - j)).is_one();
    }
    std::printf("reversal=%d symmetry=%d\n", (int)rev, (int)sym);

    // monodromy relation: which of the M candidates is G M0^{pm} G^{-1} for
    // simple words G built from the figure transport q0 -> s region
    MatrixRF qt = d.Q.transpose(), qmt = d.Q.inverse_transpose();
    MatrixRF a3t = d.A3.transpose(), a3mt = d.A3.inverse_transpose();
    MatrixRF cands[4] = {d.S * d.S.inverse_transpose(), d.S.inverse_transpose() * d.S,
                         d.S.inverse() * d.S.transpose(), d.S.transpose() * d.S.inverse()};
    const char* cn[4] = {"S S^{-t}", "S^{-t} S", "S^{-1} S^t", "S^t S^{-1}"};
    struct W { const char* name; MatrixRF g; };
    std::vector<W> ws;
    ws.push_back({"1", MatrixRF::identity(un)});
    ws.push_back({"Q^{-t}A3^{-t}", qmt * a3mt});
    ws.push_back({"Q^t A3^t", qt * a3t});
    ws.push_back({"Q^{-t}A1^{-t}", qmt * d.A1.inverse_transpose()});
    ws.push_back({"D", d.D});
    ws.push_back({"Q^{-1}D^{-1}", d.Q.inverse() * d.D.inverse()});
    ws.push_back({"QD", d.Q * d.D});
    ws.push_back({"D Q^t", d.D * qt});
    ws.push_back({"Q^{-t} D", qmt * d.D});
    ws.push_back({"A3^{-t} Q^t", a3mt * qt});
    ws.push_back({"Q A3", d.Q * d.A3});
    for (int c = 0; c < 4; ++c)
        for (const auto& w : ws) {
            MatrixRF gi = w.g.inverse();
            if (cands[c].equals(w.g * d.M0 * gi))
                std::printf("MATCH: %s = %s M0 %s^{-1}\n", cn[c], w.name, w.name);
            if (cands[c].equals(w.g * d.M0.inverse() * gi))
                std::printf("MATCH: %s = %s M0^{-1} %s^{-1}\n", cn[c], w.name, w.name);
        }

    if (n <= 4) {
        auto t2 = std::chrono::steady_clock::now();
        LogCanonicalForm lc = ugaglia_graph_form(d);
        auto t3 = std::chrono::steady_clock::now();
        std::printf("graph form: %.0fms\n", ms(t2, t3));
        LogCanonicalForm as = ugaglia_form(n);
        bool same = true;
        for (std::size_t i = 0; i < lc.vars.size(); ++i)
            for (std::size_t j = 0; j < lc.vars.size(); ++j)
                if (lc.coeff[i][j] != as.coeff[i][j]) {
                    std::printf("diff C[%s][%s]: direct=%s assembly=%s\n",
                                VarRegistry::instance().name(lc.vars[i]).c_str(),
                                VarRegistry::instance().name(lc.vars[j]).c_str(),
                                lc.coeff[i][j].get_str().c_str(), as.coeff[i][j].get_str().c_str());
                    same = false;
                }
        std::printf("forms identical=%d\n", (int)same);

        // bracket ratio (expect ugp == -8 * fb): test first two pairs
        FormBracket fb(lc);
        std::vector<std::pair<int, int>> ps;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) ps.push_back({i, j});
        std::map<VarId, RationalFunction> img;
        for (const auto& p : ps)
            img[ugaglia_s_var(p.first, p.second)] = d.S.at(p.first - 1, p.second - 1);
        PoissonStructure ug = ugaglia_bracket(n);
        auto t4 = std::chrono::steady_clock::now();
        int shown = 0;
        for (std::size_t a = 0; a < ps.size() && shown < 6; ++a)
            for (std::size_t b = a + 1; b < ps.size() && shown < 6; ++b, ++shown) {
                RationalFunction lhs = fb(d.S.at(ps[a].first - 1, ps[a].second - 1),
                                          d.S.at(ps[b].first - 1, ps[b].second - 1));
                RationalFunction r = ug.pi[a][b].substitute(img);
                bool okr = rf_equal(r, RationalFunction::from_long(-8) * lhs);
                std::printf("pair {%d%d,%d%d}: ugp==-8*fb: %d\n", ps[a].first, ps[a].second,
                            ps[b].first, ps[b].second, (int)okr);
            }
        auto t5 = std::chrono::steady_clock::now();
        std::printf("bracket checks: %.0fms\n", ms(t4, t5));
    }
    return 0;
}
