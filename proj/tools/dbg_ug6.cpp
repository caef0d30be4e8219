#include <cstdio>
#include <string>
#include <vector>

#include "stokescluster/ugaglia.hpp"

using namespace sc;

// Rebuild the figure graph with an adjustable rotation of each vertex's
// cyclic order; rot[v] rotates vertex v's order left by that many slots.
static JumpGraph build_rot(const UgagliaData& d, const std::vector<int>& rot) {
    std::size_t un = static_cast<std::size_t>(d.n);
    JumpGraph g;
    std::size_t q0 = g.add_vertex("q0");
    std::size_t q1 = g.add_vertex("q1");
    std::size_t f0 = g.add_vertex("f0");
    std::size_t f1 = g.add_vertex("f1");
    std::size_t vs = g.add_vertex("s");
    std::size_t vb = g.add_vertex("beta");
    RationalFunction eps = RationalFunction::from_long(d.s_sign);
    std::size_t eS = g.add_ray(q0, d.S.scale(eps));
    std::size_t eSmt = g.add_ray(q1, d.S.inverse_transpose().scale(eps));
    std::size_t eQ = g.add_edge(q0, q1, d.Q);
    std::size_t eQmt = g.add_edge(q1, q0, d.Q.inverse_transpose());
    std::size_t eA1 = g.add_edge(q0, f0, d.A1);
    std::size_t eA3 = g.add_edge(q1, f0, d.A3);
    std::size_t eA2 = g.add_edge(vs, f0, d.A2);
    std::size_t eA3mt = g.add_edge(q0, f1, d.A3.inverse_transpose());
    std::size_t eA1mt = g.add_edge(q1, f1, d.A1.inverse_transpose());
    std::size_t eA2mt = g.add_edge(vs, f1, d.A2.inverse_transpose());
    std::size_t eD = g.add_edge(q0, vs, d.D);
    std::size_t eDinv = g.add_edge(q1, vs, d.D.inverse());
    std::size_t eM0 = g.add_edge(vb, vs, d.M0);
    std::size_t eC0 = g.add_edge(vb, vb, ugaglia_c0(d));
    std::vector<RationalFunction> linv(un);
    for (std::size_t j = 0; j < un; ++j) linv[j] = d.M0.at(j, j).inverse();
    std::size_t eL = g.add_ray(vb, MatrixRF::diagonal(linv));

    std::vector<std::vector<JumpGraph::HalfEdge>> ord(6);
    ord[0] = {{eS, true}, {eQ, true}, {eA1, true}, {eD, true}, {eA3mt, true}, {eQmt, false}};
    ord[1] = {{eSmt, true}, {eQmt, true}, {eA1mt, true}, {eDinv, true}, {eA3, true}, {eQ, false}};
    ord[2] = {{eA3, false}, {eA2, false}, {eA1, false}};
    ord[3] = {{eA3mt, false}, {eA2mt, false}, {eA1mt, false}};
    ord[4] = {{eA2, true}, {eDinv, false}, {eA2mt, true}, {eM0, false}, {eD, false}};
    ord[5] = {{eC0, false}, {eM0, true}, {eC0, true}, {eL, true}};
    for (std::size_t v = 0; v < 6; ++v) {
        std::vector<JumpGraph::HalfEdge> o = ord[v];
        int r = rot[v] % static_cast<int>(o.size());
        std::rotate(o.begin(), o.begin() + r, o.end());
        g.set_cyclic_order(v, o);
    }
    g.validate();
    return g;
}

static std::string lc_str(const UgagliaData& d, const std::vector<int>& rot) {
    TwoForm f = graph_two_form(build_rot(d, rot));
    try {
        LogCanonicalForm lc = to_log_canonical(f, ugaglia_coords(d.n));
        std::string s;
        for (std::size_t i = 0; i < lc.vars.size(); ++i)
            for (std::size_t j = i + 1; j < lc.vars.size(); ++j) {
                long si = VarRegistry::instance().exponent_scale(lc.vars[i]);
                long sj = VarRegistry::instance().exponent_scale(lc.vars[j]);
                mpq_class q = lc.coeff[i][j] / (si * sj);
                s += q.get_str() + " ";
            }
        return s;
    } catch (const Error& e) {
        return std::string("NOTLC: ") + e.what();
    }
}

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 2;
    UgagliaData d = build_ugaglia(n);
    std::vector<int> sizes{6, 6, 3, 3, 5, 4};
    std::vector<int> base{0, 0, 0, 0, 0, 0};
    std::printf("base: %s\n", lc_str(d, base).c_str());
    for (int v = 0; v < 6; ++v)
        for (int r = 1; r < sizes[static_cast<std::size_t>(v)]; ++r) {
            std::vector<int> rot = base;
            rot[static_cast<std::size_t>(v)] = r;
            std::printf("v%d r%d: %s\n", v, r, lc_str(d, rot).c_str());
        }
    return 0;
}
