#include <chrono>
#include <cstdio>

#include "stokescluster/ugaglia.hpp"

using namespace sc;

static std::chrono::steady_clock::time_point T0 = std::chrono::steady_clock::now();
static void mark(const char* what) {
    double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - T0).count();
    std::fprintf(stderr, "[%8.2fs] %s\n", t, what);
}

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 4;
    mark("start");
    UgagliaData d = build_ugaglia(n);
    mark("build done");
    std::fprintf(stderr, "order=%s sign=%d m=%s\n", d.q0_order.c_str(), d.s_sign,
                 d.m_formula.c_str());
    MatrixRF c0 = ugaglia_c0(d);
    mark("c0 done");
    JumpGraph g = ugaglia_graph(d);
    mark("graph validated");
    LogCanonicalForm lc = ugaglia_graph_form(d);
    mark("graph form done");
    for (std::size_t i = 0; i < lc.vars.size(); ++i) {
        for (std::size_t j = 0; j < lc.vars.size(); ++j)
            std::fprintf(stderr, " %6s", lc.coeff[i][j].get_str().c_str());
        std::fprintf(stderr, "\n");
    }
    return 0;
}
