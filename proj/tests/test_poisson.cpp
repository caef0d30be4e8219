#include "doctest.h"

#include "stokescluster/poisson.hpp"

using namespace sc;

TEST_CASE("poisson_from_form inverts and transposes the coefficient matrix") {
    VarId x = VarRegistry::instance().intern("px");
    VarId y = VarRegistry::instance().intern("py");
    LogCanonicalForm lc;
    lc.vars = {x, y};
    lc.coeff = {{mpq_class(0), mpq_class(8)}, {mpq_class(-8), mpq_class(0)}};
    PoissonStructure p = poisson_from_form(lc);
    RationalFunction expect = RationalFunction::constant(mpq_frac(1, 8)) *
                              RationalFunction::variable(x) * RationalFunction::variable(y);
    CHECK(rf_equal(p.pi[0][1], expect));
    RationalFunction b = bracket(p, RationalFunction::variable(x), RationalFunction::variable(y));
    CHECK(rf_equal(b, expect));

    LogCanonicalForm degenerate;
    degenerate.vars = {x, y};
    degenerate.coeff = {{mpq_class(0), mpq_class(0)}, {mpq_class(0), mpq_class(0)}};
    CHECK_THROWS_AS(poisson_from_form(degenerate), DegenerateForm);
}

TEST_CASE("central coordinates are casimirs and drop the rank") {
    VarId x = VarRegistry::instance().intern("px");
    VarId y = VarRegistry::instance().intern("py");
    VarId z = VarRegistry::instance().intern("pz");
    PoissonStructure p;
    p.coords = {x, y, z};
    p.pi.assign(3, std::vector<RationalFunction>(3, RationalFunction::zero()));
    RationalFunction xy = RationalFunction::variable(x) * RationalFunction::variable(y);
    p.pi[0][1] = xy;
    p.pi[1][0] = -xy;
    CHECK(is_casimir(p, RationalFunction::variable(z)));
    CHECK_FALSE(is_casimir(p, RationalFunction::variable(x)));
    std::map<VarId, mpq_class> pt{{x, mpq_class(2)}, {y, mpq_class(3)}, {z, mpq_class(5)}};
    CHECK(rank_at(p, pt) == 2);
}

TEST_CASE("flaschka-newell structure matches frozen K=1 brackets") {
    PoissonStructure p = fn_structure(1);
    REQUIRE(p.coords.size() == 5);
    RationalFunction s1 = RationalFunction::variable(fn_s_var(1));
    RationalFunction s2 = RationalFunction::variable(fn_s_var(2));
    RationalFunction s3 = RationalFunction::variable(fn_s_var(3));
    RationalFunction s4 = RationalFunction::variable(fn_s_var(4));
    RationalFunction lam = RationalFunction::variable(fn_lambda_var());
    RationalFunction one = RationalFunction::one();

    CHECK(rf_equal(bracket(p, s1, s2), one + s1 * s2));
    CHECK(rf_equal(bracket(p, s2, s3), one + s2 * s3));
    CHECK(rf_equal(bracket(p, s1, s3), -s1 * s3));
    CHECK(rf_equal(bracket(p, s1, s4), -lam.pow(-2) + s1 * s4));
    CHECK(rf_equal(bracket(p, s2, s4), -s2 * s4));
    CHECK(rf_equal(bracket(p, s1, lam), -s1 * lam));
    CHECK(rf_equal(bracket(p, s2, lam), s2 * lam));
    CHECK(rf_equal(bracket(p, s3, lam), -s3 * lam));
}

TEST_CASE("flaschka-newell satisfies jacobi for K=1 coordinate triples") {
    PoissonStructure p = fn_structure(1);
    std::vector<RationalFunction> c;
    for (VarId v : p.coords) c.push_back(RationalFunction::variable(v));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            for (std::size_t k = j + 1; k < c.size(); ++k)
                CHECK(jacobiator(p, c[i], c[j], c[k]).is_zero());
}
