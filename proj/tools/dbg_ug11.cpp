// Probe: print the quadratic bracket tables and form matrices to freeze.
#include <cstdio>

#include "stokescluster/ugaglia.hpp"

using namespace sc;

static void dump(int n) {
    PoissonStructure ps = ugaglia_bracket(n);
    std::printf("== n=%d coords:", n);
    for (VarId v : ps.coords) std::printf(" %s", VarRegistry::instance().name(v).c_str());
    std::printf("\n");
    for (std::size_t p = 0; p < ps.coords.size(); ++p)
        for (std::size_t q = p + 1; q < ps.coords.size(); ++q)
            std::printf("  pi[%zu][%zu] = %s\n", p, q, ps.pi[p][q].to_string().c_str());
}

int main() {
    dump(3);
    dump(4);
    UgagliaData d2 = build_ugaglia(2);
    auto f2 = ugaglia_graph_form(d2);
    std::printf("n=2 graph form:\n");
    for (auto& row : f2.coeff) {
        for (auto& e : row) std::printf(" %s", e.get_str().c_str());
        std::printf("\n");
    }
    UgagliaData d3 = build_ugaglia(3);
    auto f3 = ugaglia_graph_form(d3);
    std::printf("n=3 graph form:\n");
    for (auto& row : f3.coeff) {
        for (auto& e : row) std::printf(" %s", e.get_str().c_str());
        std::printf("\n");
    }
    auto a3 = ugaglia_form(3);
    std::printf("n=3 assembly form:\n");
    for (auto& row : a3.coeff) {
        for (auto& e : row) std::printf(" %s", e.get_str().c_str());
        std::printf("\n");
    }
    std::printf("n=3 S12=%s\n", d3.S.at(0, 1).to_string().c_str());
    std::printf("n=3 Lambda1=%s\n", d3.Lambda.at(0, 0).to_string().c_str());
    std::printf("n=3 M0 diag: %s | %s | %s\n", d3.M0.at(0, 0).to_string().c_str(),
                d3.M0.at(1, 1).to_string().c_str(), d3.M0.at(2, 2).to_string().c_str());
    return 0;
}
