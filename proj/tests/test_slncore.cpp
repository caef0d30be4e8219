#include "doctest.h"

#include "stokescluster/error.hpp"
#include "stokescluster/slncore.hpp"

using namespace sc;

TEST_CASE("cartan data small cases") {
    CartanData c3 = cartan_data(3);
    CHECK(c3.h[0] == std::vector<long>{2, -1, -1});
    CHECK(c3.h[1] == std::vector<long>{1, 1, -2});
    CHECK(diag_trace_product(c3.alpha[0], c3.h[0]) == 3);
    CHECK(diag_trace_product(c3.alpha[0], c3.h[1]) == 0);

    CartanData c2 = cartan_data(2);
    CHECK(c2.h[0] == std::vector<long>{1, -1});
    CHECK(c2.h[0] == c2.alpha[0]);
    CHECK_THROWS_AS(cartan_data(1), Error);
}

TEST_CASE("root duality for a range of ranks") {
    for (int n = 2; n <= 6; ++n) {
        CartanData c = cartan_data(n);
        for (int i = 1; i <= n - 1; ++i)
            for (int k = 1; k <= n - 1; ++k)
                CHECK(diag_trace_product(c.alpha[i - 1], c.h[k - 1]) == (i == k ? n : 0));
    }
}

TEST_CASE("triple index enumeration") {
    CHECK(triple_indices(2).empty());
    CHECK(triple_indices(3) == std::vector<TripleIndex>{{1, 1, 1}});
    CHECK(triple_indices(4) ==
          std::vector<TripleIndex>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
    for (int n = 3; n <= 7; ++n)
        CHECK(static_cast<int>(triple_indices(n).size()) == (n - 1) * (n - 2) / 2);
}

TEST_CASE("triangle matrix at n=2 is the constant corner matrix") {
    MatrixRF a = a_matrix(2, 1, {});
    CHECK(rf_equal(a.at(0, 0), RationalFunction::zero()));
    CHECK(rf_equal(a.at(0, 1), RationalFunction::one()));
    CHECK(rf_equal(a.at(1, 0), RationalFunction::from_long(-1)));
    CHECK(rf_equal(a.at(1, 1), RationalFunction::from_long(-1)));
    CHECK((a * a * a).is_identity());
}

TEST_CASE("triangle triple product is the identity") {
    for (int n = 2; n <= 4; ++n) {
        auto x = triple_vars(n);
        MatrixRF p = a_matrix(n, 1, x) * a_matrix(n, 2, x) * a_matrix(n, 3, x);
        CHECK(p.is_identity());
    }
}

TEST_CASE("triangle matrix determinants are unit monomials") {
    for (int n = 3; n <= 4; ++n) {
        auto x = triple_vars(n);
        for (int which = 1; which <= 3; ++which) {
            RationalFunction d = a_matrix(n, which, x).det();
            CHECK(d.is_monomial());
            mpq_class c = d.num().terms().begin()->second;
            CHECK((c == 1 || c == -1));
        }
    }
}

TEST_CASE("antidiagonal sign patterns: all-ones is the working convention") {
    // n = 2: among the four sign choices only the all-ones antidiagonal
    // gives a cube root of the identity.
    int passing2 = 0;
    for (int mask = 0; mask < 4; ++mask) {
        std::vector<int> signs{mask & 1 ? -1 : 1, mask & 2 ? -1 : 1};
        MatrixRF a = a_matrix_signed(2, 1, {}, signs);
        if ((a * a * a).is_identity()) {
            ++passing2;
            CHECK(signs == std::vector<int>{1, 1});
        }
    }
    CHECK(passing2 == 1);

    // n = 3: the triple-product identity again selects the all-ones pattern.
    auto x = triple_vars(3);
    int passing3 = 0;
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<int> signs{mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1};
        MatrixRF p = a_matrix_signed(3, 1, x, signs) * a_matrix_signed(3, 2, x, signs) *
                     a_matrix_signed(3, 3, x, signs);
        if (p.is_identity()) ++passing3;
    }
    CHECK(passing3 >= 1);
    MatrixRF ones = a_matrix(3, 1, x) * a_matrix(3, 2, x) * a_matrix(3, 3, x);
    CHECK(ones.is_identity());
}

TEST_CASE("star conjugation") {
    auto x = triple_vars(4);
    MatrixRF a = a_matrix(4, 1, x);
    MatrixRF twice = star_matrix(star_matrix(a, 4), 4);
    CHECK(twice.equals(a));

    std::vector<RationalFunction> d{RationalFunction::from_long(2), RationalFunction::from_long(5),
                                    RationalFunction::from_long(7)};
    MatrixRF rev = star_matrix(MatrixRF::diagonal(d), 3);
    CHECK(rf_equal(rev.at(0, 0), d[2]));
    CHECK(rf_equal(rev.at(1, 1), d[1]));
    CHECK(rf_equal(rev.at(2, 2), d[0]));

    CHECK_THROWS_AS(star_matrix(MatrixRF::identity(3), 4), ShapeMismatch);

    // Star of the dual-root diagonals: h_i reversed equals -h_{n-i}.
    CartanData c = cartan_data(5);
    for (int i = 1; i <= 4; ++i) {
        std::vector<long> s = star_diag(c.h[i - 1]);
        std::vector<long> neg(c.h[5 - i - 1].size());
        for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -c.h[5 - i - 1][j];
        CHECK(s == neg);
    }
}

TEST_CASE("diagonal powers honor exposed exponents") {
    VarId u = VarRegistry::instance().intern("sln_u", 1);
    VarId w = VarRegistry::instance().intern("sln_w", 2);
    MatrixRF mu = var_diag_power(u, {2, 0, -1});
    CHECK(rf_equal(mu.at(0, 0), RationalFunction::variable(u, 2)));
    CHECK(rf_equal(mu.at(1, 1), RationalFunction::one()));
    MatrixRF mw = var_diag_power(w, {3});
    CHECK(rf_equal(mw.at(0, 0), RationalFunction::variable(w, 6)));
    MatrixRF hw = var_diag_half_power(w, {3});
    CHECK(rf_equal(hw.at(0, 0), RationalFunction::variable(w, 3)));
    CHECK(rf_equal(hw.at(0, 0) * hw.at(0, 0), mw.at(0, 0)));
    CHECK_THROWS_AS(var_diag_half_power(u, {3}), Error);
    MatrixRF he = var_diag_half_power(u, {4});
    CHECK(rf_equal(he.at(0, 0), RationalFunction::variable(u, 2)));
}
