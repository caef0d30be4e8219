#include "doctest.h"

#include "stokescluster/rational.hpp"

using namespace sc;

static VarId vx() { return VarRegistry::instance().intern("tx"); }
static VarId vy() { return VarRegistry::instance().intern("ty"); }

TEST_CASE("registry interning is idempotent and order-stable") {
    VarId a = VarRegistry::instance().intern("tx");
    VarId b = VarRegistry::instance().intern("ty");
    CHECK(a == vx());
    CHECK(b == vy());
    CHECK(VarRegistry::instance().name(a) == "tx");
    CHECK(VarRegistry::instance().exponent_scale(a) == 1);
    CHECK_THROWS_AS(VarRegistry::instance().intern("tx", 2), Error);
    CHECK_THROWS_AS(VarRegistry::instance().id("never-registered"), UnknownVariable);
}

TEST_CASE("polynomial arithmetic expands binomials") {
    RationalFunction x = RationalFunction::variable(vx());
    RationalFunction one = RationalFunction::one();
    RationalFunction p = (one + x).pow(3);
    CHECK(p.to_string() == "1 + 3*tx + 3*tx^2 + tx^3");
    RationalFunction q = (one + x) * (one - x);
    CHECK(q.to_string() == "1 - tx^2");
}

TEST_CASE("monomial denominators fold into the numerator") {
    RationalFunction x = RationalFunction::variable(vx());
    RationalFunction r = (RationalFunction::one() + x) / (x * x);
    CHECK(r.is_laurent_polynomial());
    CHECK(r.to_string() == "tx^-2 + tx^-1");
}

TEST_CASE("denominator normalization is canonical") {
    RationalFunction x = RationalFunction::variable(vx());
    RationalFunction y = RationalFunction::variable(vy());
    RationalFunction half = RationalFunction::constant(mpq_frac(1, 2));
    // (y)/( -x/2 - x^2/2 ): denominator becomes 1 + tx with positive leading 1.
    RationalFunction r = y / (-(half * x) - half * x * x);
    CHECK(r.to_string() == "(-2*tx^-1*ty)/(1 + tx)");
    RationalFunction s = y / (x + x * x);
    CHECK(rf_equal(r, s * RationalFunction::from_long(-2)));
}

TEST_CASE("cross-multiplied equality sees through missing gcd reduction") {
    RationalFunction x = RationalFunction::variable(vx());
    RationalFunction y = RationalFunction::variable(vy());
    RationalFunction a = (x * x - y * y) / (x + y);
    RationalFunction b = x - y;
    CHECK(rf_equal(a, b));
    CHECK_FALSE(rf_equal(a, x + y));
}

TEST_CASE("division by zero and substitution singularities throw") {
    RationalFunction x = RationalFunction::variable(vx());
    CHECK_THROWS_AS(x / RationalFunction::zero(), DivisionByZero);
    CHECK_THROWS_AS(RationalFunction::zero().inverse(), DivisionByZero);
    std::map<VarId, RationalFunction> kill{{vx(), RationalFunction::zero()}};
    CHECK_THROWS_AS(x.pow(-1).substitute(kill), SubstitutionSingular);
    RationalFunction r = RationalFunction::one() / (RationalFunction::one() + x);
    std::map<VarId, RationalFunction> minus_one{{vx(), RationalFunction::from_long(-1)}};
    CHECK_THROWS_AS(r.substitute(minus_one), SubstitutionSingular);
}

TEST_CASE("evaluation is exact and reports poles") {
    RationalFunction x = RationalFunction::variable(vx());
    RationalFunction y = RationalFunction::variable(vy());
    RationalFunction r = (x + y) / (x - y);
    std::map<VarId, mpq_class> p{{vx(), mpq_class(3)}, {vy(), mpq_class(1)}};
    CHECK(r.eval(p) == mpq_class(2));
    std::map<VarId, mpq_class> q{{vx(), mpq_class(1)}, {vy(), mpq_class(1)}};
    CHECK_THROWS_AS(r.eval(q), PoleAtPoint);
    std::map<VarId, mpq_class> z{{vx(), mpq_class(0)}};
    CHECK_THROWS_AS(x.pow(-2).eval(z), PoleAtPoint);
    std::map<VarId, mpq_class> missing{{vx(), mpq_class(1)}};
    CHECK_THROWS_AS(r.eval(missing), UnknownVariable);
}

TEST_CASE("derivatives follow the quotient rule") {
    RationalFunction x = RationalFunction::variable(vx());
    RationalFunction r = RationalFunction::one() / (RationalFunction::one() + x);
    RationalFunction expect = -(RationalFunction::one() + x).pow(-2);
    CHECK(rf_equal(r.derivative(vx()), expect));
    CHECK(rf_equal(x.pow(3).derivative(vx()), RationalFunction::from_long(3) * x * x));
    CHECK(rf_equal(x.pow(-1).derivative(vx()), -x.pow(-2)));
}

TEST_CASE("log derivative respects the exponent scale") {
    VarId u = VarRegistry::instance().intern("tu_half", 2);
    RationalFunction uu = RationalFunction::variable(u); // internal symbol: sqrt of exposed u
    // Exposed f = u = uu^2; u d/du f = u, i.e. uu^2.
    RationalFunction f = uu * uu;
    CHECK(rf_equal(f.log_derivative(u), f));
    // Exposed g = u^{1/2} = uu; u d/du g = uu/2.
    CHECK(rf_equal(uu.log_derivative(u), uu * RationalFunction::constant(mpq_frac(1, 2))));
    CHECK(uu.to_string() == "tu_half^(1/2)");
    RationalFunction x = RationalFunction::variable(vx());
    CHECK(rf_equal((x * x).log_derivative(vx()), RationalFunction::from_long(2) * x * x));
}

TEST_CASE("parity scan detects odd exponents") {
    RationalFunction x = RationalFunction::variable(vx());
    RationalFunction y = RationalFunction::variable(vy());
    RationalFunction f = x * x + y.pow(4) * x.pow(-2);
    CHECK(f.even_in(vx()));
    CHECK(f.even_in(vy()));
    CHECK_FALSE((f * y).even_in(vy()));
}

TEST_CASE("substitution composes rational functions") {
    RationalFunction x = RationalFunction::variable(vx());
    RationalFunction y = RationalFunction::variable(vy());
    RationalFunction f = (RationalFunction::one() + x) / x;
    std::map<VarId, RationalFunction> img{{vx(), y / (RationalFunction::one() + y)}};
    RationalFunction g = f.substitute(img);
    RationalFunction expect = (RationalFunction::one() + RationalFunction::from_long(2) * y) / y;
    CHECK(rf_equal(g, expect));
}
