#include "doctest.h"

#include "stokescluster/matrix.hpp"

using namespace sc;

namespace {
MatrixRF m22(long a, long b, long c, long d) {
    MatrixRF m(2, 2);
    m.at(0, 0) = RationalFunction::from_long(a);
    m.at(0, 1) = RationalFunction::from_long(b);
    m.at(1, 0) = RationalFunction::from_long(c);
    m.at(1, 1) = RationalFunction::from_long(d);
    return m;
}
} // namespace

TEST_CASE("inverse agrees with adjugate over det") {
    VarId x = VarRegistry::instance().intern("mx");
    VarId y = VarRegistry::instance().intern("my");
    MatrixRF m(3, 3);
    m.at(0, 0) = RationalFunction::variable(x);
    m.at(0, 1) = RationalFunction::one();
    m.at(0, 2) = RationalFunction::zero();
    m.at(1, 0) = RationalFunction::one();
    m.at(1, 1) = RationalFunction::variable(y);
    m.at(1, 2) = RationalFunction::variable(x, -1);
    m.at(2, 0) = RationalFunction::zero();
    m.at(2, 1) = RationalFunction::one();
    m.at(2, 2) = RationalFunction::one();
    MatrixRF inv = m.inverse();
    CHECK((m * inv).is_identity());
    CHECK((inv * m).is_identity());
    MatrixRF adj_over_det = m.adjugate().scale(m.det().inverse());
    CHECK(inv.equals(adj_over_det));
}

TEST_CASE("singular matrices are rejected") {
    MatrixRF m = m22(1, 2, 2, 4);
    CHECK(m.det().is_zero());
    CHECK_THROWS_AS(m.inverse(), SingularMatrix);
}

TEST_CASE("determinant and trace of an integer matrix") {
    MatrixRF m = m22(2, 3, 1, 4);
    CHECK(m.det().to_string() == "5");
    CHECK(m.trace().to_string() == "6");
    CHECK(m.pow(2).equals(m * m));
    CHECK(m.pow(-1).equals(m.inverse()));
    CHECK(m.pow(0).is_identity());
}

TEST_CASE("shape mismatches throw") {
    MatrixRF a(2, 3), b(2, 3);
    CHECK_THROWS_AS(a * b, ShapeMismatch);
    CHECK_THROWS_AS(a.det(), ShapeMismatch);
    CHECK_NOTHROW(a + b);
}

TEST_CASE("exact rank of rational matrices") {
    std::vector<std::vector<mpq_class>> m{
        {mpq_class(1), mpq_class(2), mpq_class(3)},
        {mpq_class(2), mpq_class(4), mpq_class(6)},
        {mpq_class(0), mpq_class(1), mpq_class(1)}};
    CHECK(rank_q(m) == 2);
    std::vector<std::vector<mpq_class>> skew{
        {mpq_class(0), mpq_class(1)},
        {mpq_class(-1), mpq_class(0)}};
    CHECK(rank_q(skew) == 2);
}

TEST_CASE("substitute and eval act entrywise") {
    VarId x = VarRegistry::instance().intern("mx");
    MatrixRF m(1, 2);
    m.at(0, 0) = RationalFunction::variable(x, 2);
    m.at(0, 1) = RationalFunction::variable(x, -1);
    std::map<VarId, mpq_class> p{{x, mpq_frac(1, 2)}};
    auto e = m.eval(p);
    CHECK(e[0][0] == mpq_frac(1, 4));
    CHECK(e[0][1] == mpq_class(2));
    std::map<VarId, RationalFunction> img{{x, RationalFunction::variable(x) + RationalFunction::one()}};
    CHECK(rf_equal(m.substitute(img).at(0, 1),
                   (RationalFunction::variable(x) + RationalFunction::one()).inverse()));
}
