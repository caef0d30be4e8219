#include "doctest.h"

#include "stokescluster/compare.hpp"
#include "stokescluster/error.hpp"
#include "stokescluster/ugaglia.hpp"

using namespace sc;

namespace {

std::vector<std::vector<mpq_class>> qmat(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<mpq_class>> out;
    for (auto& r : rows) {
        out.emplace_back();
        for (long v : r) out.back().emplace_back(v);
    }
    return out;
}

} // namespace

TEST_CASE("dual root gram pairing") {
    CHECK(gram_hh(3, 1, 1) == 6);
    CHECK(gram_hh(3, 1, 2) == 3);
    CHECK(gram_hh(3, 2, 1) == 3);
    CHECK(gram_hh(4, 2, 2) == 16);
    CHECK(gram_hh(2, 1, 1) == 2);
}

TEST_CASE("triangle pair coefficients vanish through rank five") {
    CHECK(f_coefficient(3, {1, 1, 1}, {1, 1, 1}) == 0);
    for (int n = 4; n <= 5; ++n) {
        auto ts = triple_indices(n);
        for (const auto& t : ts)
            for (const auto& u : ts) CHECK(f_coefficient(n, t, u) == 0);
    }
}

TEST_CASE("triangle pair coefficients are skew and first appear at rank six") {
    CHECK(f_coefficient(6, {1, 2, 3}, {2, 3, 1}) == -6);
    CHECK(f_coefficient(6, {2, 3, 1}, {1, 2, 3}) == 6);
    auto ts = triple_indices(6);
    bool any = false;
    for (const auto& t : ts)
        for (const auto& u : ts) {
            CHECK(f_coefficient(6, t, u) == -f_coefficient(6, u, t));
            if (f_coefficient(6, t, u) != 0) any = true;
        }
    CHECK(any);
}

TEST_CASE("form coordinates enumerate triples then torus directions") {
    CHECK(ugaglia_coords(2).size() == 2);  // zeta_1, gamma_1
    CHECK(ugaglia_coords(3).size() == 4);  // xi_111, zeta_1, zeta_2, gamma_1
    CHECK(ugaglia_coords(4).size() == 8);  // 3 triples + 3 zeta + 2 gamma
}

TEST_CASE("closed-sum form matrix at rank three") {
    LogCanonicalForm lc = ugaglia_form(3);
    CHECK(lc.coeff == qmat({{0, -6, 0, -12}, {6, 0, 0, -4}, {0, 0, 0, -4}, {12, 4, 4, 0}}));
}

TEST_CASE("build solves a unit upper triangular Stokes matrix") {
    UgagliaData d2 = build_ugaglia(2);
    CHECK(d2.s_sign == -1);
    CHECK(d2.q0_order == "-A1,D,A3^{-t}");
    CHECK(d2.S.at(0, 0).is_one());
    CHECK(d2.S.at(1, 1).is_one());
    CHECK(d2.S.at(1, 0).is_zero());
    CHECK(!d2.S.at(0, 1).is_zero());

    UgagliaData d3 = build_ugaglia(3);
    CHECK(d3.s_sign == 1);
    CHECK(d3.q0_order == "A1,D,A3^{-t}");
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < i; ++j) CHECK(d3.S.at(i, j).is_zero());
    // The toric diagonal variables cancel out of every Stokes entry.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            for (VarId v : d3.S.at(i, j).variables())
                for (VarId cv : d3.c) CHECK(v != cv);

    CHECK_THROWS_AS(build_ugaglia(1), Error);
}

TEST_CASE("monodromy transport formula holds at small ranks") {
    for (int n = 2; n <= 3; ++n) {
        UgagliaData d = build_ugaglia(n);
        CHECK(d.m_formula == "S S^{-t} = Q^{-t} A3^t M0 A3^{-t} Q^t");
        MatrixRF g1 = d.Q.inverse_transpose() * d.A3.transpose();
        CHECK((d.S * d.S.inverse_transpose()).equals(g1 * d.M0 * g1.inverse()));
        MatrixRF g2 = d.Q * d.A1 * d.D;
        CHECK((d.S.inverse_transpose() * d.S).equals(g2 * d.M0 * g2.inverse()));
    }
}

TEST_CASE("local monodromy diagonal carries the closed-form eigenvalues reversed") {
    for (int n = 2; n <= 4; ++n) {
        UgagliaData d = build_ugaglia(n);
        std::size_t un = static_cast<std::size_t>(n);
        MatrixRF evals = ugaglia_eigenvalues(d);
        for (std::size_t j = 0; j < un; ++j) {
            CHECK(rf_equal(d.Lambda.at(un - 1 - j, un - 1 - j), evals.at(j, j)));
            CHECK((d.Lambda.at(j, j) * d.Lambda.at(un - 1 - j, un - 1 - j)).is_one());
        }
    }
}

TEST_CASE("eigenvector normalization of the diagonalizer") {
    UgagliaData d = build_ugaglia(3);
    MatrixRF c0 = ugaglia_c0(d);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) CHECK(c0.at(i, j).is_zero());
    CHECK(rf_equal(c0.at(0, 0), RationalFunction::variable(d.c[0], 1)));
    CHECK(c0.at(1, 1).is_one());
    CHECK(rf_equal(c0.at(2, 2), RationalFunction::variable(d.c[0], -1)));
    // Columns diagonalize: C0^{-1} M0 C0 equals the eigenvalue diagonal.
    MatrixRF diag = c0.inverse() * d.M0 * c0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) CHECK(diag.at(i, j).is_zero());
    for (std::size_t i = 0; i < 3; ++i) CHECK(rf_equal(diag.at(i, i), d.M0.at(i, i)));
}

TEST_CASE("jump graph validates and its form is frozen at small ranks") {
    UgagliaData d2 = build_ugaglia(2);
    JumpGraph g2 = ugaglia_graph(d2);
    LogCanonicalForm f2 = ugaglia_graph_form(d2);
    CHECK(f2.coeff == qmat({{0, -8}, {8, 0}}));

    UgagliaData d3 = build_ugaglia(3);
    JumpGraph g3 = ugaglia_graph(d3);
    LogCanonicalForm f3 = ugaglia_graph_form(d3);
    CHECK(f3.coeff == qmat({{0, 6, -12, -12}, {-6, 0, 0, -4}, {12, 0, 0, -4}, {12, 4, 4, 0}}));

    // Pointwise evaluation reproduces the symbolic matrices seed-independently.
    CHECK(ugaglia_graph_form_at(g2, 2, 7) == f2.coeff);
    CHECK(ugaglia_graph_form_at(g3, 3, 0) == f3.coeff);
    CHECK(ugaglia_graph_form_at(g3, 3, 1) == f3.coeff);
}

TEST_CASE("quadratic bracket tables") {
    CHECK_THROWS_AS(ugaglia_bracket(2), Error);
    PoissonStructure p3 = ugaglia_bracket(3);
    REQUIRE(p3.coords.size() == 3);
    CHECK(p3.pi[0][1].to_string() == "-s12*s13 + 2*s23");
    CHECK(p3.pi[0][2].to_string() == "s12*s23 - 2*s13");
    CHECK(p3.pi[1][2].to_string() == "2*s12 - s13*s23");
    PoissonStructure p4 = ugaglia_bracket(4);
    REQUIRE(p4.coords.size() == 6);
    CHECK(p4.pi[1][4].to_string() == "2*s12*s34 - 2*s23*s14");  // {s13, s24}
    CHECK(p4.pi[0][5].is_zero());                               // {s12, s34}
    CHECK(p4.pi[2][3].is_zero());                               // {s14, s23}
    for (std::size_t p = 0; p < 6; ++p)
        for (std::size_t q = 0; q < 6; ++q) CHECK(rf_equal(p4.pi[p][q], -p4.pi[q][p]));
}

TEST_CASE("quadratic bracket is minus eight times the graph form bracket") {
    UgagliaData d = build_ugaglia(3);
    FormBracket fb(ugaglia_graph_form(d));
    PoissonStructure ups = ugaglia_bracket(3);
    std::map<VarId, RationalFunction> subs;
    subs[ugaglia_s_var(1, 2)] = d.S.at(0, 1);
    subs[ugaglia_s_var(1, 3)] = d.S.at(0, 2);
    subs[ugaglia_s_var(2, 3)] = d.S.at(1, 2);
    RationalFunction factor = RationalFunction::from_long(-8);
    for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = p + 1; q < 3; ++q) {
            RationalFunction lhs = factor * fb(subs[ups.coords[p]], subs[ups.coords[q]]);
            CHECK(rf_equal(lhs, ups.pi[p][q].substitute(subs)));
        }
    // The eigenvalue is a Casimir of the form bracket on the Stokes entries.
    RationalFunction m1 = d.Lambda.at(0, 0);
    for (const auto& [v, e] : subs) {
        (void)v;
        CHECK(fb(m1, e).is_zero());
    }
}

TEST_CASE("full verification passes at ranks two to four") {
    for (int n = 2; n <= 4; ++n) {
        Comparer cmp(n <= 3 ? CompareMode::Symbolic : CompareMode::Pointwise, 20, 1);
        std::vector<CheckItem> items;
        std::map<std::string, std::string> conv;
        check_ugaglia(n, cmp, items, conv, 0);
        CHECK(!items.empty());
        for (const auto& it : items) {
            INFO("n=", n, " item=", it.name);
            CHECK(it.ok);
        }
        CHECK(conv.at("graph_form_mode") == (n <= 3 ? "symbolic" : "pointwise"));
        CHECK(conv.at("m_formula") != "none");
    }
}
