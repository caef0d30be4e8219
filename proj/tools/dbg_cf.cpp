#include "stokescluster/stokes2.hpp"
#include <iostream>

using namespace sc;

int main() {
    for (int K = 2; K <= 3; ++K) {
        Triangulation t = fan_triangulation(K);
        StokesData d = stokes_matrices(t);
        StokesData cf = fan_closed_form(K);
        std::cout << "K=" << K << "\n";
        for (int l = 0; l < 2 * K + 2; ++l) {
            bool ok = rf_equal(d.s[l], cf.s[l]);
            std::cout << "  s" << (l + 1) << (ok ? " ok" : " MISMATCH") << "\n";
            if (!ok) {
                std::cout << "    solve: " << d.s[l].to_string() << "\n";
                std::cout << "    prop : " << cf.s[l].to_string() << "\n";
            }
        }
        std::cout << "  lambda " << (rf_equal(d.lambda, cf.lambda) ? "ok" : "MISMATCH") << "\n";
    }
    return 0;
}
