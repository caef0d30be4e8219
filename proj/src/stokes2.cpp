#include "stokescluster/stokes2.hpp"

#include <algorithm>

#include "stokescluster/error.hpp"

namespace sc {

namespace {

RationalFunction neg(const RationalFunction& f) { return RationalFunction::zero() - f; }

RationalFunction one_half() { return RationalFunction::constant(mpq_frac(1, 2)); }

struct InteriorItem {
    bool is_face;
    int key;
    int index; // face array index or diagonal slot
};

int cyclic_key(int from, int to, int n) {
    int r = (to - from) % n;
    if (r <= 0) r += n;
    return r;
}

// Interior incidences at a corner, swept counterclockwise from the outgoing
// perimeter side to the incoming one; triangles and diagonals interleave.
std::vector<InteriorItem> interior_items(const Triangulation& t, int l,
                                         const std::vector<std::array<int, 3>>& tris) {
    const int n = t.side_count();
    std::vector<InteriorItem> out;
    for (std::size_t i = 0; i < tris.size(); ++i) {
        const auto& tri = tris[i];
        if (tri[0] != l && tri[1] != l && tri[2] != l) continue;
        int key = 0;
        for (int c : tri)
            if (c != l) key += cyclic_key(l, c, n);
        out.push_back({true, key, static_cast<int>(i)});
    }
    for (int slot : t.slots_at(l)) {
        const auto& d = t.diagonal(slot);
        int m = d.a == l ? d.b : d.a;
        out.push_back({false, 2 * cyclic_key(l, m, n), slot});
    }
    std::sort(out.begin(), out.end(),
              [](const InteriorItem& a, const InteriorItem& b) { return a.key < b.key; });
    if (out.empty() || !out.front().is_face || !out.back().is_face)
        throw Error("interior sweep must start and end on a triangle");
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i].is_face == out[i + 1].is_face)
            throw Error("interior sweep must alternate triangles and diagonals");
    return out;
}

MatrixRF diagonal_away(const Triangulation& t, int slot, int l) {
    const auto& d = t.diagonal(slot);
    MatrixRF v = jump_v(RationalFunction::variable(t.label_var(slot)));
    return d.orientation.first == l ? v : v.inverse();
}

MatrixRF interior_product(const Triangulation& t, int l,
                          const std::vector<std::array<int, 3>>& tris) {
    MatrixRF m = MatrixRF::identity(2);
    MatrixRF a = corner_matrix();
    for (const auto& item : interior_items(t, l, tris))
        m = m * (item.is_face ? a : diagonal_away(t, item.index, l));
    return m;
}

MatrixRF perimeter_jump(const StokesData& d, int l) {
    if (l == 1) return jump_v(d.chi[0].inverse());
    return l % 2 == 0 ? jump_d(d.chi[l - 1]) : jump_v(d.chi[l - 1].inverse());
}

} // namespace

MatrixRF jump_v(const RationalFunction& p) {
    MatrixRF m(2, 2);
    m.at(0, 1) = neg(p);
    m.at(1, 0) = p.inverse();
    return m;
}

MatrixRF jump_d(const RationalFunction& x) {
    return MatrixRF::diagonal({x.inverse(), x});
}

MatrixRF corner_matrix() {
    MatrixRF a(2, 2);
    a.at(0, 1) = RationalFunction::one();
    a.at(1, 0) = neg(RationalFunction::one());
    a.at(1, 1) = neg(RationalFunction::one());
    return a;
}

StokesData stokes_matrices(const Triangulation& t) {
    t.validate();
    const int N = t.side_count();
    auto tris = triangles_of(t);
    StokesData d;
    d.K = t.K;
    d.s.assign(N, RationalFunction::zero());
    d.chi.assign(N, RationalFunction::zero());
    d.chi[0] = RationalFunction::variable(t.boundary_var());

    // The first corner fixes s_1 and the wrap-around perimeter scalar: the
    // away product S_1 C_1 M_1 C_N^{-1} forces C_1 M_1 upper triangular.
    MatrixRF w1 = perimeter_jump(d, 1) * interior_product(t, 1, tris);
    if (!w1.at(1, 0).is_zero())
        throw TriangularityViolated("corner 1 lower-left entry: " + w1.at(1, 0).to_string());
    d.chi[N - 1] = w1.at(1, 1);
    d.s[0] = neg(w1.at(0, 1)) / w1.at(1, 1);

    // Corner l determines s_l and the scalar of the outgoing side from
    // S_l C_l = C_{l-1} M_l^{-1}.
    for (int l = 2; l <= N - 1; ++l) {
        MatrixRF w = perimeter_jump(d, l - 1) * interior_product(t, l, tris).inverse();
        if (l % 2 == 0) {
            if (!w.at(0, 1).is_zero())
                throw TriangularityViolated("corner " + std::to_string(l) +
                                            " upper-right entry: " + w.at(0, 1).to_string());
            d.s[l - 1] = w.at(1, 0) / w.at(0, 0);
            d.chi[l - 1] = w.at(1, 1);
        } else {
            if (!w.at(1, 1).is_zero())
                throw TriangularityViolated("corner " + std::to_string(l) +
                                            " lower-right entry: " + w.at(1, 1).to_string());
            d.s[l - 1] = w.at(0, 0) / w.at(1, 0);
            d.chi[l - 1] = w.at(1, 0);
        }
    }

    // The last corner carries the merged ray: S_N Lambda inverts the full
    // away product of its sides.
    MatrixRF r =
        (perimeter_jump(d, N) * interior_product(t, N, tris) * perimeter_jump(d, N - 1).inverse())
            .inverse();
    if (!r.at(0, 1).is_zero())
        throw TriangularityViolated("corner " + std::to_string(N) +
                                    " upper-right entry: " + r.at(0, 1).to_string());
    d.lambda = r.at(0, 0);
    d.s[N - 1] = r.at(1, 0) / r.at(0, 0);
    return d;
}

StokesData fan_closed_form(int K) {
    Triangulation t = fan_triangulation(K);
    const int N = 2 * K + 2;
    std::vector<RationalFunction> y(2 * K + 1);
    for (int j = 1; j <= 2 * K; ++j) y[j] = RationalFunction::variable(t.label_var(j));

    StokesData d;
    d.K = K;
    d.s.assign(N, RationalFunction::zero());
    d.chi.assign(N, RationalFunction::zero());

    // Alternating product of squared slot variables up to a bound.
    auto alt = [&](int up_to, bool odd_positive) {
        RationalFunction p = RationalFunction::one();
        for (int j = 1; j <= up_to; ++j) {
            RationalFunction sq = y[j] * y[j];
            bool positive = (j % 2 == 1) == odd_positive;
            p = positive ? p * sq : p / sq;
        }
        return p;
    };

    d.s[0] = neg((y[1] * y[1]).inverse());
    for (int k = 1; k <= K; ++k)
        d.s[2 * k - 1] = (RationalFunction::one() + y[2 * k] * y[2 * k]) * alt(2 * k, true);
    for (int k = 1; k <= K - 1; ++k)
        d.s[2 * k] =
            neg((RationalFunction::one() + y[2 * k + 1] * y[2 * k + 1]) * alt(2 * k + 1, false));
    d.s[2 * K] = neg(alt(2 * K, false));

    // nested = 1 + y2^2 (1 + y3^2 (... (1 + y_{2K}^2) ...)), over all indices 2..2K
    RationalFunction nested = RationalFunction::one() + y[2 * K] * y[2 * K];
    for (int j = 2 * K - 1; j >= 2; --j)
        nested = RationalFunction::one() + y[j] * y[j] * nested;
    RationalFunction evens = RationalFunction::one();
    for (int j = 1; j <= K; ++j) evens = evens * y[2 * j] * y[2 * j];
    d.s[N - 1] = y[1] * y[1] * nested / (evens * evens);
    d.lambda = K % 2 == 0 ? evens : neg(evens);

    auto xs = x_variables(t);
    for (int l = 1; l <= N; ++l) d.chi[l - 1] = xs[l - 1];
    return d;
}

MatrixRF stokes_matrix(const StokesData& d, int l) {
    MatrixRF m = MatrixRF::identity(2);
    if (l % 2 == 1)
        m.at(0, 1) = d.s[l - 1];
    else
        m.at(1, 0) = d.s[l - 1];
    return m;
}

MatrixRF lambda_matrix(const StokesData& d) {
    return MatrixRF::diagonal({d.lambda, d.lambda.inverse()});
}

JumpGraph polygon_graph(const Triangulation& t, const StokesData& d) {
    const int N = t.side_count();
    auto tris = triangles_of(t);
    JumpGraph g;
    std::vector<std::size_t> v(N + 1);
    for (int l = 1; l <= N; ++l) v[l] = g.add_vertex("v" + std::to_string(l));
    std::vector<std::size_t> z(tris.size());
    for (std::size_t i = 0; i < tris.size(); ++i)
        z[i] = g.add_vertex("z" + std::to_string(i + 1));

    std::vector<std::size_t> ray(N + 1);
    for (int l = 1; l <= N; ++l) {
        MatrixRF s = stokes_matrix(d, l);
        if (l == N) s = s * lambda_matrix(d);
        ray[l] = g.add_ray(v[l], s);
    }
    std::vector<std::size_t> side(N + 1);
    for (int l = 1; l <= N; ++l)
        side[l] = g.add_edge(v[l], v[l == N ? 1 : l + 1], perimeter_jump(d, l));

    std::map<std::pair<int, int>, std::size_t> center_edge;
    MatrixRF a = corner_matrix();
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (int corner : tris[i])
            center_edge[{corner, static_cast<int>(i)}] = g.add_edge(v[corner], z[i], a);

    std::map<int, std::size_t> diag_edge;
    for (const auto& dd : t.diagonals)
        diag_edge[dd.slot] = g.add_edge(v[dd.orientation.first], v[dd.orientation.second],
                                        jump_v(RationalFunction::variable(t.label_var(dd.slot))));

    for (int l = 1; l <= N; ++l) {
        std::vector<JumpGraph::HalfEdge> order;
        order.push_back({ray[l], true});
        order.push_back({side[l], true});
        for (const auto& item : interior_items(t, l, tris)) {
            if (item.is_face)
                order.push_back({center_edge[{l, item.index}], true});
            else
                order.push_back(
                    {diag_edge[item.index], t.diagonal(item.index).orientation.first == l});
        }
        order.push_back({side[l == 1 ? N : l - 1], false});
        g.set_cyclic_order(v[l], order);
    }
    for (std::size_t i = 0; i < tris.size(); ++i) {
        std::vector<JumpGraph::HalfEdge> order;
        for (int corner : tris[i])
            order.push_back({center_edge[{corner, static_cast<int>(i)}], false});
        g.set_cyclic_order(z[i], order);
    }
    return g;
}

JumpGraph star_graph(const StokesData& d, bool merged_lambda_ray) {
    const int N = 2 * d.K + 2;
    JumpGraph g;
    std::size_t c = g.add_vertex("c");
    std::vector<JumpGraph::HalfEdge> order;
    for (int l = 1; l <= N; ++l) {
        MatrixRF s = stokes_matrix(d, l);
        if (l == N && merged_lambda_ray) s = s * lambda_matrix(d);
        order.push_back({g.add_ray(c, s), true});
    }
    if (!merged_lambda_ray) order.push_back({g.add_ray(c, lambda_matrix(d)), true});
    g.set_cyclic_order(c, order);
    return g;
}

FormData stokes_form(const Triangulation& t) {
    FormData f;
    f.data = stokes_matrices(t);
    JumpGraph g = polygon_graph(t, f.data);
    g.validate();
    f.omega = graph_two_form(g);
    std::vector<VarId> vars;
    for (int slot = 1; slot <= 2 * t.K; ++slot) vars.push_back(t.label_var(slot));
    f.half = to_log_canonical(f.omega.scale(one_half()), vars);
    f.poisson = poisson_from_form(f.half);
    return f;
}

std::vector<RationalFunction> flip_square_images(const Triangulation& t, int slot) {
    const int n = 2 * t.K;
    YSeed seed{quiver_of(t).hatted(), {}};
    seed.y.resize(n);
    for (int i = 0; i < n; ++i) {
        RationalFunction sq = RationalFunction::variable(t.label_var(i + 1), 2);
        seed.y[i] = i == 0 ? sq.inverse() : sq;
    }
    YSeed out = y_seed_mutation(seed, static_cast<std::size_t>(slot - 1));
    std::vector<RationalFunction> q(n);
    for (int i = 0; i < n; ++i) q[i] = i == 0 ? out.y[0].inverse() : out.y[i];
    return q;
}

void check_monodromy(int K, std::vector<CheckItem>& items) {
    Triangulation t = fan_triangulation(K);
    StokesData d = stokes_matrices(t);
    items.push_back({"vertex_conditions", true, ""});

    auto xs = x_variables(t);
    bool monomial = true, squares = true;
    for (int l = 1; l <= 2 * K + 2; ++l) {
        monomial &= d.chi[l - 1].is_monomial();
        squares &= rf_equal(d.chi[l - 1] * d.chi[l - 1], xs[l - 1] * xs[l - 1]);
    }
    items.push_back({"perimeter_scalar_monomial", monomial, ""});
    items.push_back({"perimeter_scalar_squares", squares, ""});

    MatrixRF prod = MatrixRF::identity(2);
    for (int l = 1; l <= 2 * K + 2; ++l) prod = prod * stokes_matrix(d, l);
    prod = prod * lambda_matrix(d);
    items.push_back({"monodromy_identity", prod.is_identity(), ""});

    bool even = true;
    for (int slot = 1; slot <= 2 * K; ++slot) {
        VarId v = t.label_var(slot);
        for (const auto& s : d.s) even &= s.even_in(v);
        even &= d.lambda.even_in(v);
    }
    items.push_back({"parity_even", even, ""});

    StokesData cf = fan_closed_form(K);
    bool match = rf_equal(d.lambda, cf.lambda);
    for (int l = 1; l <= 2 * K + 2; ++l) match &= rf_equal(d.s[l - 1], cf.s[l - 1]);
    items.push_back({"closed_form_match", match, ""});

    polygon_graph(t, d).validate();
    items.push_back({"graph_vertex_relations", true, ""});
}

void check_form(const Triangulation& t, bool expect_fan_pattern,
                std::vector<CheckItem>& items) {
    FormData f = stokes_form(t);
    items.push_back({"log_canonical", true, ""});

    const int n = 2 * t.K;
    Quiver q = quiver_of(t);
    bool quarter = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RationalFunction expect = RationalFunction::constant(mpq_frac(q.at(i, j), 4)) *
                                      RationalFunction::variable(f.half.vars[i]) *
                                      RationalFunction::variable(f.half.vars[j]);
            quarter &= rf_equal(f.poisson.pi[i][j], expect);
        }
    items.push_back({"poisson_quarter_quiver", quarter, ""});

    if (expect_fan_pattern) {
        LogCanonicalForm full = to_log_canonical(f.omega, f.half.vars);
        bool pattern = true;
        for (int p = 1; p <= n; ++p)
            for (int r = p + 1; r <= n; ++r) {
                mpq_class expect = (p % 2 == 1 && r % 2 == 0) ? 8 : 0;
                pattern &= full.coeff[p - 1][r - 1] == expect;
            }
        items.push_back({"fan_eight_pattern", pattern, ""});
    }
}

void check_fn_pushforward(int K, Comparer& cmp, std::vector<CheckItem>& items) {
    Triangulation t = fan_triangulation(K);
    FormData f = stokes_form(t);
    PoissonStructure fn = fn_structure(K);
    const int N = 2 * K + 2;

    std::map<VarId, RationalFunction> phi;
    std::vector<RationalFunction> pulled;
    std::vector<std::string> names;
    for (int j = 1; j <= N; ++j) {
        phi[fn_s_var(j)] = f.data.s[j - 1];
        pulled.push_back(f.data.s[j - 1]);
        names.push_back("s" + std::to_string(j));
    }
    phi[fn_lambda_var()] = f.data.lambda;
    pulled.push_back(f.data.lambda);
    names.push_back("lambda");

    for (std::size_t i = 0; i < pulled.size(); ++i)
        for (std::size_t j = i + 1; j < pulled.size(); ++j) {
            RationalFunction lhs = bracket(f.poisson, pulled[i], pulled[j]);
            RationalFunction rhs = fn.pi[i][j].substitute(phi);
            items.push_back(
                {"pair_" + names[i] + "_" + names[j], cmp.equal(lhs, rhs, f.half.vars), ""});
        }
}

void check_flip_mutation(const Triangulation& t, int slot, Comparer& cmp,
                         std::vector<CheckItem>& items) {
    StokesData base = stokes_matrices(t);
    Triangulation ft = flip(t, slot);
    StokesData flipped = stokes_matrices(ft);
    items.push_back({"quiver_mutation", quiver_of(ft) == quiver_of(t).mutate(slot - 1), ""});

    std::vector<RationalFunction> q = flip_square_images(t, slot);
    std::map<VarId, RationalFunction> images;
    for (int i = 1; i <= 2 * t.K; ++i) images[ft.label_var(i)] = q[i - 1];
    std::vector<VarId> yvars;
    for (int i = 1; i <= 2 * t.K; ++i) yvars.push_back(t.label_var(i));

    const int N = 2 * t.K + 2;
    for (int l = 1; l <= N; ++l) {
        RationalFunction lhs = substitute_squares(flipped.s[l - 1], images);
        items.push_back(
            {"s" + std::to_string(l), cmp.equal(lhs, base.s[l - 1], yvars), ""});
    }
    items.push_back(
        {"lambda", cmp.equal(substitute_squares(flipped.lambda, images), base.lambda, yvars), ""});
}

void check_fn_ideal(int K, bool jacobi_symbolic, int corank_points,
                    unsigned long long seed, std::vector<CheckItem>& items) {
    PoissonStructure fn = fn_structure(K);
    const int N = 2 * K + 2;
    std::vector<RationalFunction> svals;
    for (int j = 1; j <= N; ++j) svals.push_back(RationalFunction::variable(fn_s_var(j)));
    RationalFunction lam = RationalFunction::variable(fn_lambda_var());

    MatrixRF F = MatrixRF::identity(2);
    for (int l = 1; l <= N; ++l) {
        MatrixRF u = MatrixRF::identity(2);
        if (l % 2 == 1)
            u.at(0, 1) = svals[l - 1];
        else
            u.at(1, 0) = svals[l - 1];
        F = F * u;
    }
    F = F * MatrixRF::diagonal({lam, lam.inverse()});

    auto bracket_with = [&](const RationalFunction& x) {
        MatrixRF r(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.at(i, j) = bracket(fn, x, F.at(i, j));
        return r;
    };
    auto comm = [](const MatrixRF& a, const MatrixRF& b) { return a * b - b * a; };
    MatrixRF sigma3(2, 2), sigma_plus(2, 2), sigma_minus(2, 2);
    sigma3.at(0, 0) = RationalFunction::one();
    sigma3.at(1, 1) = neg(RationalFunction::one());
    sigma_plus.at(0, 1) = RationalFunction::one();
    sigma_minus.at(1, 0) = RationalFunction::one();

    {
        MatrixRF lhs = bracket_with(svals[0]);
        MatrixRF rhs = comm(sigma3, F).scale(svals[0] * one_half()) + comm(sigma_minus, F);
        items.push_back({"ideal_s1", lhs.equals(rhs), ""});
    }
    for (int l = 2; l <= N - 1; ++l) {
        MatrixRF lhs = bracket_with(svals[l - 1]);
        RationalFunction c = svals[l - 1] * one_half();
        if (l % 2 == 1) c = neg(c);
        items.push_back(
            {"ideal_s" + std::to_string(l), lhs.equals(comm(F, sigma3).scale(c)), ""});
    }
    {
        MatrixRF lhs = bracket_with(svals[N - 1]);
        MatrixRF rhs = comm(F, sigma3).scale(svals[N - 1] * one_half()) +
                       comm(sigma_plus, F).scale((lam * lam).inverse());
        items.push_back({"ideal_s" + std::to_string(N), lhs.equals(rhs), ""});
    }
    {
        MatrixRF lhs = bracket_with(lam);
        items.push_back({"ideal_lambda", lhs.equals(comm(sigma3, F).scale(lam * one_half())), ""});
    }
    items.push_back({"trace_casimir", is_casimir(fn, F.trace()), ""});

    {
        std::vector<RationalFunction> coords = svals;
        coords.push_back(lam);
        bool ok = true;
        PointSampler sampler(seed);
        for (std::size_t i = 0; i < coords.size() && ok; ++i)
            for (std::size_t j = i + 1; j < coords.size() && ok; ++j)
                for (std::size_t k = j + 1; k < coords.size() && ok; ++k) {
                    RationalFunction jac = jacobiator(fn, coords[i], coords[j], coords[k]);
                    ok = jacobi_symbolic
                             ? jac.is_zero()
                             : rf_equal_at_points(jac, RationalFunction::zero(), fn.coords, 5,
                                                  sampler);
                }
        items.push_back({"jacobi", ok, ""});
    }

    {
        PointSampler sampler(seed + 1);
        bool ok = true;
        for (int p = 0; p < corank_points; ++p) {
            auto pt = sampler.point(fn.coords);
            ok &= rank_at(fn, pt) == static_cast<std::size_t>(N);
        }
        items.push_back({"corank_one", ok, ""});
    }
}

} // namespace sc
