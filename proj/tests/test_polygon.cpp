#include "doctest.h"

#include "stokescluster/error.hpp"
#include "stokescluster/polygon.hpp"

using namespace sc;

namespace {

RationalFunction pv(const std::string& name) {
    return RationalFunction::variable(VarRegistry::instance().intern(name));
}

} // namespace

TEST_CASE("fan triangulation layout and orientations") {
    Triangulation t = fan_triangulation(2);
    REQUIRE(t.side_count() == 6);
    REQUIRE(t.diagonals.size() == 3);
    CHECK(t.diagonal(2).a == 2);
    CHECK(t.diagonal(2).b == 6);
    CHECK(t.diagonal(3).a == 3);
    CHECK(t.diagonal(3).b == 6);
    CHECK(t.diagonal(4).a == 4);
    CHECK(t.diagonal(4).b == 6);
    CHECK(t.label_name(1) == "y1");
    CHECK(t.label_name(2) == "y2");
    CHECK(t.label_name(3) == "y3");
    CHECK(t.label_name(4) == "y4");
    CHECK(t.diagonal(2).orientation == std::make_pair(6, 2));
    CHECK(t.diagonal(3).orientation == std::make_pair(3, 6));
    CHECK(t.diagonal(4).orientation == std::make_pair(6, 4));
    CHECK(t.slots_at(6) == std::vector<int>{2, 3, 4});
    CHECK(t.slots_at(1).empty());
}

TEST_CASE("triangle faces are the fully connected triples") {
    Triangulation t = fan_triangulation(2);
    std::vector<std::array<int, 3>> tri = triangles_of(t);
    REQUIRE(tri.size() == 4);
    CHECK(tri[0] == std::array<int, 3>{1, 2, 6});
    CHECK(tri[1] == std::array<int, 3>{2, 3, 6});
    CHECK(tri[2] == std::array<int, 3>{3, 4, 6});
    CHECK(tri[3] == std::array<int, 3>{4, 5, 6});
}

TEST_CASE("side monomials of the fan alternate the slot variables") {
    Triangulation t = fan_triangulation(2);
    std::vector<RationalFunction> xs = x_variables(t);
    REQUIRE(xs.size() == 6);
    RationalFunction y1 = pv("y1"), y2 = pv("y2"), y3 = pv("y3"), y4 = pv("y4");
    CHECK(rf_equal(xs[0], y1));
    CHECK(rf_equal(xs[1], y1 / y2));
    CHECK(rf_equal(xs[2], y1 / y2 * y3));
    CHECK(rf_equal(xs[3], y1 / y2 * y3 / y4));
    CHECK(rf_equal(xs[4], xs[3]));
    CHECK(rf_equal(xs[5], y1));
}

TEST_CASE("fan quiver is the type A path for K up to 4") {
    for (int K = 1; K <= 4; ++K) {
        Triangulation t = fan_triangulation(K);
        CHECK(quiver_of(t) == Quiver::dynkin_a(2 * K));
    }
}

TEST_CASE("flip replaces the diagonal and bumps the label generation") {
    Triangulation t = fan_triangulation(2);
    Triangulation f = flip(t, 2);
    CHECK(f.diagonal(2).a == 1);
    CHECK(f.diagonal(2).b == 3);
    CHECK(f.label_name(2) == "y2_t1");
    CHECK(f.diagonal(2).orientation == std::make_pair(1, 3));
    CHECK(f.diagonal(3).a == 3);
    CHECK(f.diagonal(4).a == 4);

    Triangulation ff = flip(f, 2);
    CHECK(ff.diagonal(2).a == 2);
    CHECK(ff.diagonal(2).b == 6);
    CHECK(ff.label_name(2) == "y2_t2");
    CHECK(quiver_of(ff) == Quiver::dynkin_a(4));

    CHECK_THROWS_AS(flip(t, 1), NotADiagonal);
    CHECK_THROWS_AS(flip(t, 5), NotADiagonal);
}

TEST_CASE("flipping a slot mutates the quiver at that slot") {
    for (int K = 2; K <= 3; ++K) {
        Triangulation t = fan_triangulation(K);
        for (int slot = 2; slot <= 2 * K; ++slot) {
            Triangulation f = flip(t, slot);
            CHECK(quiver_of(f) == quiver_of(t).mutate(slot - 1));
        }
    }
}

TEST_CASE("flip case is four minus the perimeter sides of the quadrilateral") {
    Triangulation t = fan_triangulation(2);
    CHECK(classify_flip(t, 2) == 1);
    CHECK(classify_flip(t, 3) == 2);
    CHECK(classify_flip(t, 4) == 1);

    Triangulation c3 = make_triangulation(
        3, {{2, 8, 2}, {3, 8, 3}, {3, 6, 4}, {6, 8, 5}, {4, 6, 6}});
    CHECK(classify_flip(c3, 3) == 3);

    Triangulation c4 = make_triangulation(
        3, {{1, 3, 2}, {3, 5, 3}, {5, 7, 4}, {1, 7, 5}, {3, 7, 6}});
    CHECK(classify_flip(c4, 6) == 4);
}

TEST_CASE("side monomials after one flip match the incidence rule") {
    Triangulation t2 = flip(fan_triangulation(2), 2);
    RationalFunction y1 = pv("y1"), y2f = pv("y2_t1"), y3 = pv("y3"), y4 = pv("y4");
    std::vector<RationalFunction> xs = x_variables(t2);
    CHECK(rf_equal(xs[1], y1));
    CHECK(rf_equal(xs[2], y1 * y2f * y3));
    CHECK(rf_equal(xs[3], y1 * y2f * y3 / y4));
    CHECK(rf_equal(xs[4], xs[3]));
    CHECK(rf_equal(xs[5], y1 / y2f));

    Triangulation t3 = flip(fan_triangulation(2), 3);
    RationalFunction y2 = pv("y2"), y3f = pv("y3_t1");
    xs = x_variables(t3);
    CHECK(rf_equal(xs[1], y1 / (y2 * y3f)));
    CHECK(rf_equal(xs[2], xs[1]));
    CHECK(rf_equal(xs[3], y1 / (y2 * y3f * y3f * y4)));
    CHECK(rf_equal(xs[4], xs[3]));
    CHECK(rf_equal(xs[5], y1));
}

TEST_CASE("triangulation json round trip is byte exact") {
    Triangulation t = fan_triangulation(2);
    std::string s = triangulation_to_json(t);
    Triangulation back = triangulation_from_json(s);
    CHECK(triangulation_to_json(back) == s);
    CHECK(back.diagonal(2).a == 2);
    CHECK(back.label_name(2) == "y2");

    Triangulation f = flip(t, 3);
    std::string sf = triangulation_to_json(f);
    Triangulation backf = triangulation_from_json(sf);
    CHECK(triangulation_to_json(backf) == sf);
    CHECK(backf.label_name(3) == "y3_t1");
    CHECK(backf.diagonal(3).generation == 1);
}

TEST_CASE("invalid triangulations are rejected") {
    CHECK_THROWS_AS(make_triangulation(2, {{2, 6, 2}, {3, 6, 3}, {1, 4, 4}}),
                    Error); // (1,4) crosses (2,6)
    CHECK_THROWS_AS(make_triangulation(2, {{2, 6, 2}, {3, 6, 3}, {2, 3, 4}}),
                    NotADiagonal);
    CHECK_THROWS_AS(make_triangulation(2, {{2, 6, 2}, {3, 6, 3}}), Error);
    CHECK_THROWS_AS(
        triangulation_from_json("{\"K\": 1, \"diagonals\": [[2, 4]], "
                                "\"labels\": {\"2-4\": \"y2\"}, "
                                "\"orientations\": {\"2-4\": [2, 4]}, "
                                "\"distinguished_edge\": [2, 3]}"),
        Error);
    CHECK_THROWS_AS(triangulation_from_json("not json"), Error);
}
