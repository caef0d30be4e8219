#include "doctest.h"

#include "stokescluster/form.hpp"

using namespace sc;

namespace {
VarId fx() { return VarRegistry::instance().intern("fx"); }
VarId fy() { return VarRegistry::instance().intern("fy"); }

MatrixRF upper(const RationalFunction& t) {
    MatrixRF m = MatrixRF::identity(2);
    m.at(0, 1) = t;
    return m;
}
MatrixRF lower(const RationalFunction& t) {
    MatrixRF m = MatrixRF::identity(2);
    m.at(1, 0) = t;
    return m;
}
} // namespace

TEST_CASE("maurer cartan of a diagonal jump") {
    VarId x = fx();
    MatrixRF d(2, 2);
    d.at(0, 0) = RationalFunction::variable(x);
    d.at(1, 1) = RationalFunction::variable(x, -1);
    OneForm mc = maurer_cartan(d, MCSide::Left);
    REQUIRE(mc.components().size() == 1);
    const MatrixRF& c = mc.components().at(x);
    CHECK(rf_equal(c.at(0, 0), RationalFunction::variable(x, -1)));
    CHECK(rf_equal(c.at(1, 1), -RationalFunction::variable(x, -1)));
    CHECK(c.at(0, 1).is_zero());
}

TEST_CASE("maurer cartan sides differ by conjugation") {
    VarId y = fy();
    MatrixRF j = upper(RationalFunction::variable(y, 2));
    OneForm l = maurer_cartan(j, MCSide::Left);
    OneForm r = maurer_cartan(j, MCSide::Right);
    CHECK(rf_equal(l.components().at(y).at(0, 1),
                   RationalFunction::from_long(2) * RationalFunction::variable(y)));
    CHECK(rf_equal(r.components().at(y).at(0, 1),
                   RationalFunction::from_long(2) * RationalFunction::variable(y)));
}

TEST_CASE("two-form accumulation folds antisymmetry") {
    VarId x = fx(), y = fy();
    TwoForm f;
    f.add(x, y, RationalFunction::from_long(3));
    f.add(y, x, RationalFunction::from_long(1));
    CHECK(rf_equal(f.coefficient(x, y), RationalFunction::from_long(2)));
    CHECK(rf_equal(f.coefficient(y, x), RationalFunction::from_long(-2)));
    f.add(x, y, RationalFunction::from_long(-2));
    CHECK(f.is_zero());
}

TEST_CASE("single-vertex graph two-form matches the hand value") {
    VarId x = fx(), y = fy();
    MatrixRF j1 = upper(RationalFunction::variable(y));
    MatrixRF j2 = lower(RationalFunction::variable(x));
    MatrixRF j3 = (j1 * j2).inverse();
    JumpGraph g;
    std::size_t v = g.add_vertex("v");
    std::size_t e1 = g.add_ray(v, j1);
    std::size_t e2 = g.add_ray(v, j2);
    std::size_t e3 = g.add_ray(v, j3);
    g.set_cyclic_order(v, {{e1, true}, {e2, true}, {e3, true}});
    CHECK_NOTHROW(g.validate());
    TwoForm omega = graph_two_form(g);
    CHECK(rf_equal(omega.coefficient(x, y), RationalFunction::from_long(-1)));
    CHECK(omega.coefficients().size() == 1);
}

TEST_CASE("vertex relation violations are reported") {
    JumpGraph g;
    std::size_t v = g.add_vertex("bad");
    std::size_t e = g.add_ray(v, upper(RationalFunction::one()));
    g.set_cyclic_order(v, {{e, true}});
    CHECK_THROWS_AS(g.validate(), VertexRelationViolated);
}

TEST_CASE("edge jumps invert at the head") {
    JumpGraph g;
    std::size_t a = g.add_vertex("a");
    std::size_t b = g.add_vertex("b");
    MatrixRF m = upper(RationalFunction::from_long(5));
    std::size_t e = g.add_edge(a, b, m);
    std::size_t ra = g.add_ray(a, m.inverse());
    std::size_t rb = g.add_ray(b, m);
    g.set_cyclic_order(a, {{e, true}, {ra, true}});
    g.set_cyclic_order(b, {{e, false}, {rb, true}});
    CHECK_NOTHROW(g.validate());
    CHECK(g.away_jump({e, false}).equals(m.inverse()));
}

TEST_CASE("log-canonical extraction and its failure mode") {
    VarId x = fx(), y = fy();
    TwoForm good;
    good.add(x, y, RationalFunction::from_long(8) *
                       RationalFunction::variable(x, -1) * RationalFunction::variable(y, -1));
    LogCanonicalForm lc = to_log_canonical(good, {x, y});
    CHECK(lc.coeff[0][1] == mpq_class(8));
    CHECK(lc.coeff[1][0] == mpq_class(-8));

    TwoForm bad;
    bad.add(x, y, RationalFunction::one());
    CHECK_THROWS_AS(to_log_canonical(bad, {x, y}), NotLogCanonical);
    CHECK_THROWS_AS(to_log_canonical(good, {x}), NotLogCanonical);
}
