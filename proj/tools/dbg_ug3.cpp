#include <cstdio>

#include "stokescluster/slncore.hpp"

using namespace sc;

static bool unit_upper(const MatrixRF& s) {
    for (std::size_t i = 0; i < s.rows(); ++i) {
        if (!s.at(i, i).is_one()) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (!s.at(i, j).is_zero()) return false;
    }
    return true;
}

int main() {
    int n = 3;
    auto x = triple_vars(n, 2);
    std::vector<VarId> z;
    for (int j = 1; j <= n - 1; ++j)
        z.push_back(VarRegistry::instance().intern("z" + std::to_string(j), 2));
    CartanData cart = cartan_data(n);
    MatrixRF A1 = a_matrix(n, 1, x), A3 = a_matrix(n, 3, x);
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
    MatrixRF mids[2][3] = {{A1, D, a3mt}, {A1.inverse(), D.inverse(), a3mt.inverse()}};
    const char* mname[2][3] = {{"A1", "D", "A3^-t"}, {"A1^-1", "D^-1", "A3^t"}};
    MatrixRF sand[4][2] = {{Q, Q.transpose()},
                           {Q.transpose(), Q},
                           {Q.inverse(), Q.inverse_transpose()},
                           {Q.inverse_transpose(), Q.inverse()}};
    const char* sname[4] = {"Q..Qt", "Qt..Q", "Q^-1..Q^-t", "Q^-t..Q^-1"};
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int sd = 0; sd < 4; ++sd)
        for (int inv = 0; inv < 2; ++inv)
            for (auto& p : perms) {
                MatrixRF r = sand[sd][0] * mids[inv][p[0]] * mids[inv][p[1]] *
                             mids[inv][p[2]] * sand[sd][1];
                MatrixRF cand = r.inverse();
                int sign = 0;
                if (unit_upper(cand))
                    sign = 1;
                else if (unit_upper(cand.scale(RationalFunction::from_long(-1))))
                    sign = -1;
                if (sign == 0) continue;
                std::printf("HIT sandwich=%s mid=%s,%s,%s sign=%+d\n", sname[sd],
                            mname[inv][p[0]], mname[inv][p[1]], mname[inv][p[2]], sign);
                MatrixRF s = sign > 0 ? cand : cand.scale(RationalFunction::from_long(-1));
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        std::printf("   S[%d][%d] = %s\n", i, j, s.at(i, j).to_string().c_str());
            }
    return 0;
}
