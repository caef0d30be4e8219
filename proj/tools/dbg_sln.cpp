#include "stokescluster/slncore.hpp"
#include <iostream>

using namespace sc;

int main() {
    int n = 4;
    auto x = triple_vars(n);
    // reading A: which=2 -> (b,c,a), which=3 -> (c,a,b)  [current]
    MatrixRF pa = a_matrix(n, 1, x) * a_matrix(n, 2, x) * a_matrix(n, 3, x);
    std::cout << "cycle (b,c,a) then (c,a,b): " << (pa.is_identity() ? "identity" : "NOT identity")
              << "\n";
    // reading B: swap roles of which=2 and which=3
    MatrixRF pb = a_matrix(n, 1, x) * a_matrix(n, 3, x) * a_matrix(n, 2, x);
    std::cout << "cycle (c,a,b) then (b,c,a): " << (pb.is_identity() ? "identity" : "NOT identity")
              << "\n";
    return 0;
}
