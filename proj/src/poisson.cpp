#include "stokescluster/poisson.hpp"

namespace sc {

std::vector<std::vector<mpq_class>> inverse_transpose_q(
    const std::vector<std::vector<mpq_class>>& m) {
    std::size_t n = m.size();
    std::vector<std::vector<mpq_class>> w = m;
    std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n, mpq_class(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i].size() != n) throw ShapeMismatch("inverse_transpose_q needs a square matrix");
        inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && w[piv][col] == 0) ++piv;
        if (piv == n) throw DegenerateForm("coefficient matrix is singular");
        std::swap(w[piv], w[col]);
        std::swap(inv[piv], inv[col]);
        mpq_class p = 1 / w[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            w[col][j] *= p;
            inv[col][j] *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w[i][col] == 0) continue;
            mpq_class f = w[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                w[i][j] -= f * w[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    std::vector<std::vector<mpq_class>> t(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = inv[j][i];
    return t;
}

PoissonStructure poisson_from_form(const LogCanonicalForm& lc) {
    auto p = inverse_transpose_q(lc.coeff);
    PoissonStructure ps;
    ps.coords = lc.vars;
    std::size_t n = lc.vars.size();
    ps.pi.assign(n, std::vector<RationalFunction>(n, RationalFunction::zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (p[i][j] == 0) continue;
            ps.pi[i][j] = RationalFunction::constant(p[i][j]) *
                          RationalFunction::variable(lc.vars[i]) *
                          RationalFunction::variable(lc.vars[j]);
        }
    return ps;
}

RationalFunction bracket(const PoissonStructure& p, const RationalFunction& f,
                         const RationalFunction& g) {
    std::size_t n = p.coords.size();
    RationalFunction acc;
    std::vector<RationalFunction> df(n), dg(n);
    for (std::size_t i = 0; i < n; ++i) {
        df[i] = f.derivative(p.coords[i]);
        dg[i] = g.derivative(p.coords[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (p.pi[i][j].is_zero()) continue;
            RationalFunction t = df[i] * dg[j] - df[j] * dg[i];
            if (!t.is_zero()) acc += p.pi[i][j] * t;
        }
    return acc;
}

RationalFunction jacobiator(const PoissonStructure& p, const RationalFunction& f,
                            const RationalFunction& g, const RationalFunction& h) {
    return bracket(p, f, bracket(p, g, h)) + bracket(p, g, bracket(p, h, f)) +
           bracket(p, h, bracket(p, f, g));
}

bool is_casimir(const PoissonStructure& p, const RationalFunction& f) {
    for (VarId v : p.coords)
        if (!bracket(p, f, RationalFunction::variable(v)).is_zero()) return false;
    return true;
}

std::size_t rank_at(const PoissonStructure& p, const std::map<VarId, mpq_class>& point) {
    std::size_t n = p.coords.size();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, mpq_class(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!p.pi[i][j].is_zero()) m[i][j] = p.pi[i][j].eval(point);
    return rank_q(m);
}

VarId fn_s_var(int j) {
    return VarRegistry::instance().intern("s" + std::to_string(j));
}

VarId fn_lambda_var() { return VarRegistry::instance().intern("lambda"); }

PoissonStructure fn_structure(int K) {
    if (K < 1) throw Error("fn_structure needs K >= 1");
    int n = 2 * K + 2;
    PoissonStructure p;
    for (int j = 1; j <= n; ++j) p.coords.push_back(fn_s_var(j));
    VarId lam = fn_lambda_var();
    p.coords.push_back(lam);
    std::size_t m = p.coords.size();
    p.pi.assign(m, std::vector<RationalFunction>(m, RationalFunction::zero()));
    for (int j = 1; j <= n; ++j) {
        RationalFunction sj = RationalFunction::variable(fn_s_var(j));
        for (int l = j + 1; l <= n; ++l) {
            RationalFunction sl = RationalFunction::variable(fn_s_var(l));
            RationalFunction v = sj * sl;
            if ((j - l + 1) % 2 != 0) v = -v;
            if (j == l - 1) v += RationalFunction::one();
            if (j == 1 && l == n)
                v -= RationalFunction::variable(lam, -2);
            p.pi[j - 1][l - 1] = v;
            p.pi[l - 1][j - 1] = -v;
        }
        RationalFunction w = sj * RationalFunction::variable(lam);
        if (j % 2 != 0) w = -w;
        p.pi[j - 1][m - 1] = w;
        p.pi[m - 1][j - 1] = -w;
    }
    return p;
}

} // namespace sc
