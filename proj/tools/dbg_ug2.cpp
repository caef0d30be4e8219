#include <cstdio>

#include "stokescluster/slncore.hpp"
#include "stokescluster/rational.hpp"

using namespace sc;

int main() {
    int n = 3;
    auto x = triple_vars(n, 2);
    std::vector<VarId> z;
    for (int j = 1; j <= n - 1; ++j)
        z.push_back(VarRegistry::instance().intern("z" + std::to_string(j), 2));
    CartanData cart = cartan_data(n);
    MatrixRF A1 = a_matrix(n, 1, x), A2 = a_matrix(n, 2, x), A3 = a_matrix(n, 3, x);
    std::vector<RationalFunction> dd(n);
    for (int j = 0; j < n; ++j) {
        RationalFunction e = RationalFunction::one();
        if (j < n - 1) e = e * RationalFunction::variable(z[j], 2);
        if (j > 0) e = e * RationalFunction::variable(z[j - 1], -2);
        dd[j] = e;
    }
    MatrixRF D = MatrixRF::diagonal(dd);
    MatrixRF w = MatrixRF::identity(n);
    for (const auto& [t, v] : x) {
        std::vector<long> e = star_diag(cart.h[t.c - 1]);
        for (int j = 0; j < n; ++j) e[j] += cart.h[t.a - 1][j];
        w = w * var_diag_half_power(v, e);
    }
    for (int j = 1; j <= n - 1; ++j) w = w * var_diag_half_power(z[j - 1], cart.alpha[j - 1]);
    int qsign = ((n + 1) / 2) % 2 == 0 ? 1 : -1;
    MatrixRF Q = (w * cart.P).scale(RationalFunction::from_long(qsign));
    MatrixRF a3mt = A3.inverse_transpose();
    MatrixRF qt = Q.transpose();
    const MatrixRF* base[3] = {&A1, &D, &a3mt};
    const char* nm[3] = {"A1", "D", "A3mt"};
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& p : perms) {
        MatrixRF r = Q * *base[p[0]] * *base[p[1]] * *base[p[2]] * qt;
        MatrixRF cand = r.inverse();
        std::printf("order %s,%s,%s:\n", nm[p[0]], nm[p[1]], nm[p[2]]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                std::printf("  [%d][%d] = %s\n", i, j, cand.at(i, j).to_string().c_str());
    }
    return 0;
}
