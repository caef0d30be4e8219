#include "doctest.h"

#include "stokescluster/cluster.hpp"

using namespace sc;

namespace {
Quiver from_rows(const std::vector<std::vector<long>>& rows) {
    Quiver q(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[i][j] != 0) q.set(i, j, rows[i][j]);
    return q;
}
} // namespace

TEST_CASE("dynkin path quiver") {
    Quiver a4 = Quiver::dynkin_a(4);
    CHECK(a4.is_dynkin_a());
    CHECK(a4.at(0, 1) == 1);
    CHECK(a4.at(1, 0) == -1);
    CHECK(a4.at(0, 2) == 0);
    CHECK_FALSE(a4.mutate_plain(1).is_dynkin_a());
}

TEST_CASE("plain mutation of the path at vertex 2") {
    Quiver a4 = Quiver::dynkin_a(4);
    Quiver m = a4.mutate_plain(1);
    Quiver expect = from_rows({{0, -1, 1, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
    CHECK(m == expect);
    CHECK(m.mutate_plain(1) == a4);
}

TEST_CASE("transport mutation matches the frozen displays") {
    Quiver a4 = Quiver::dynkin_a(4);
    CHECK(a4.mutate(1) ==
          from_rows({{0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}));
    CHECK(a4.mutate(2) ==
          from_rows({{0, 1, 0, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}, {0, 0, 0, 0}}));
    CHECK(a4.mutate(3) ==
          from_rows({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}, {0, 0, 0, 0}}));
    for (std::size_t k = 0; k < 4; ++k) CHECK(a4.mutate(k).mutate(k) == a4);
}

TEST_CASE("hatted matrices mutate plainly") {
    Quiver a4 = Quiver::dynkin_a(4);
    CHECK(a4.hatted() ==
          from_rows({{0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}, {0, 0, 0, 0}}));
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(a4.mutate(k).hatted() == a4.hatted().mutate_plain(k));
    CHECK(a4.hatted().hatted() == a4);
}

TEST_CASE("coefficient mutation follows the column reading") {
    std::vector<VarId> v;
    for (int i = 1; i <= 4; ++i)
        v.push_back(VarRegistry::instance().intern("cy" + std::to_string(i)));
    YSeed s{Quiver::dynkin_a(4), {}};
    for (VarId x : v) s.y.push_back(RationalFunction::variable(x));
    YSeed m = y_seed_mutation(s, 1);
    RationalFunction y1 = RationalFunction::variable(v[0]);
    RationalFunction y2 = RationalFunction::variable(v[1]);
    RationalFunction y3 = RationalFunction::variable(v[2]);
    RationalFunction y4 = RationalFunction::variable(v[3]);
    RationalFunction one = RationalFunction::one();
    CHECK(rf_equal(m.y[0], y1 * y2 / (one + y2)));
    CHECK(rf_equal(m.y[1], y2.inverse()));
    CHECK(rf_equal(m.y[2], y3 * (one + y2)));
    CHECK(rf_equal(m.y[3], y4));
    CHECK(m.quiver == s.quiver.mutate_plain(1));
    // Mutation is an involution on seeds.
    YSeed back = y_seed_mutation(m, 1);
    for (std::size_t i = 0; i < 4; ++i) CHECK(rf_equal(back.y[i], s.y[i]));
    CHECK(back.quiver == s.quiver);
}
