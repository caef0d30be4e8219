#include "stokescluster/slncore.hpp"

#include <string>

namespace sc {

std::vector<TripleIndex> triple_indices(int n) {
    std::vector<TripleIndex> out;
    for (int a = 1; a <= n - 2; ++a)
        for (int b = 1; a + b <= n - 1; ++b) out.push_back({a, b, n - a - b});
    return out;
}

std::map<TripleIndex, VarId> triple_vars(int n, int exponent_scale) {
    std::map<TripleIndex, VarId> out;
    for (const TripleIndex& t : triple_indices(n)) {
        std::string name = "x" + std::to_string(t.a) + std::to_string(t.b) + std::to_string(t.c);
        out[t] = VarRegistry::instance().intern(name, exponent_scale);
    }
    return out;
}

CartanData cartan_data(int n) {
    if (n < 2) throw Error("cartan_data requires n >= 2");
    CartanData c;
    c.n = n;
    for (int i = 1; i <= n - 1; ++i) {
        std::vector<long> a(n, 0), hh(n);
        a[i - 1] = 1;
        a[i] = -1;
        for (int j = 0; j < n; ++j) hh[j] = j < i ? n - i : -i;
        c.alpha.push_back(a);
        c.h.push_back(hh);
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int k = 1; k <= n - 1; ++k) {
            long want = i == k ? n : 0;
            if (diag_trace_product(c.alpha[i - 1], c.h[k - 1]) != want)
                throw Error("root duality failed at n=" + std::to_string(n));
        }
    c.P = MatrixRF(n, n);
    for (int j = 0; j < n; ++j) c.P.at(j, n - 1 - j) = RationalFunction::one();
    std::vector<RationalFunction> sg(n);
    for (int j = 0; j < n; ++j) sg[j] = RationalFunction::from_long(j % 2 == 0 ? 1 : -1);
    c.sigma = MatrixRF::diagonal(sg);
    return c;
}

MatrixRF var_diag_power(VarId x, const std::vector<long>& d) {
    int s = VarRegistry::instance().exponent_scale(x);
    std::vector<RationalFunction> e(d.size());
    for (std::size_t j = 0; j < d.size(); ++j)
        e[j] = d[j] == 0 ? RationalFunction::one() : RationalFunction::variable(x, d[j] * s);
    return MatrixRF::diagonal(e);
}

MatrixRF var_diag_half_power(VarId x, const std::vector<long>& d) {
    int s = VarRegistry::instance().exponent_scale(x);
    std::vector<RationalFunction> e(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (s == 1 && d[j] % 2 != 0)
            throw Error("half power of a unit-scale variable");
        std::int64_t stored = s == 2 ? d[j] : d[j] / 2;
        e[j] = stored == 0 ? RationalFunction::one() : RationalFunction::variable(x, stored);
    }
    return MatrixRF::diagonal(e);
}

long diag_trace_product(const std::vector<long>& u, const std::vector<long>& v) {
    if (u.size() != v.size()) throw ShapeMismatch("diag_trace_product");
    long t = 0;
    for (std::size_t j = 0; j < u.size(); ++j) t += u[j] * v[j];
    return t;
}

std::vector<long> star_diag(const std::vector<long>& d) {
    return std::vector<long>(d.rbegin(), d.rend());
}

namespace {

MatrixRF f_matrix(int n, int i) { // 1 + E_{i+1,i}, 1-based i
    MatrixRF F = MatrixRF::identity(static_cast<std::size_t>(n));
    F.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) = RationalFunction::one();
    return F;
}

TripleIndex rotate(const TripleIndex& t, int which) {
    if (which == 1) return t;
    if (which == 2) return {t.c, t.a, t.b};
    return {t.b, t.c, t.a};
}

} // namespace

MatrixRF a_matrix_signed(int n, int which, const std::map<TripleIndex, VarId>& x,
                         const std::vector<int>& signs) {
    if (which < 1 || which > 3) throw Error("a_matrix: which must be 1, 2 or 3");
    CartanData c = cartan_data(n);
    MatrixRF prod = MatrixRF::identity(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 1; --k) {
        MatrixRF nk = MatrixRF::identity(static_cast<std::size_t>(n));
        for (int i = k; i <= n - 2; ++i) {
            TripleIndex t{n - i - 1, i - k + 1, k};
            auto it = x.find(rotate(t, which));
            if (it == x.end()) throw Error("a_matrix: missing variable for triple");
            std::vector<long> mh(c.h[i].size());
            for (std::size_t j = 0; j < mh.size(); ++j) mh[j] = -c.h[i][j];
            nk = nk * var_diag_power(it->second, mh) * f_matrix(n, i);
        }
        nk = nk * f_matrix(n, n - 1);
        prod = prod * nk;
    }
    MatrixRF P(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        P.at(static_cast<std::size_t>(j), static_cast<std::size_t>(n - 1 - j)) =
            RationalFunction::from_long(signs[static_cast<std::size_t>(j)]);
    return c.sigma * prod * P;
}

MatrixRF a_matrix(int n, int which, const std::map<TripleIndex, VarId>& x) {
    return a_matrix_signed(n, which, x, std::vector<int>(static_cast<std::size_t>(n), 1));
}

MatrixRF star_matrix(const MatrixRF& M, int n) {
    std::size_t un = static_cast<std::size_t>(n);
    if (M.rows() != un || M.cols() != un) throw ShapeMismatch("star_matrix");
    MatrixRF out(un, un);
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = 0; j < un; ++j) out.at(i, j) = M.at(un - 1 - i, un - 1 - j);
    return out;
}

} // namespace sc
