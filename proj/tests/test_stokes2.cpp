#include "doctest.h"

#include "stokescluster/error.hpp"
#include "stokescluster/stokes2.hpp"

using namespace sc;

namespace {

RationalFunction sv(const std::string& name) {
    return RationalFunction::variable(VarRegistry::instance().intern(name));
}

bool all_ok(const std::vector<CheckItem>& items) {
    for (const auto& it : items)
        if (!it.ok) {
            MESSAGE("failed item: ", it.name);
            return false;
        }
    return true;
}

} // namespace

TEST_CASE("square solve matches the hand computation") {
    StokesData d = stokes_matrices(fan_triangulation(1));
    RationalFunction y1 = sv("y1"), y2 = sv("y2");
    RationalFunction one = RationalFunction::one();
    CHECK(rf_equal(d.s[0], RationalFunction::zero() - (y1 * y1).inverse()));
    CHECK(rf_equal(d.s[1], y1 * y1 * (one + y2 * y2) / (y2 * y2)));
    CHECK(rf_equal(d.s[2], RationalFunction::zero() - y2 * y2 / (y1 * y1)));
    CHECK(rf_equal(d.s[3], y1 * y1 * (one + y2 * y2) / (y2 * y2).pow(2)));
    CHECK(rf_equal(d.lambda, RationalFunction::zero() - y2 * y2));
    CHECK(rf_equal(d.chi[1], y1 / y2));
    CHECK(rf_equal(d.chi[3], y1));
}

TEST_CASE("sequential solve equals the closed form") {
    for (int K = 1; K <= 3; ++K) {
        StokesData d = stokes_matrices(fan_triangulation(K));
        StokesData cf = fan_closed_form(K);
        for (int l = 0; l < 2 * K + 2; ++l) CHECK(rf_equal(d.s[l], cf.s[l]));
        CHECK(rf_equal(d.lambda, cf.lambda));
    }
}

TEST_CASE("monodromy check items pass") {
    for (int K = 1; K <= 3; ++K) {
        std::vector<CheckItem> items;
        check_monodromy(K, items);
        CHECK(all_ok(items));
    }
}

TEST_CASE("solve works on flipped and custom triangulations") {
    Triangulation t = fan_triangulation(2);
    for (int slot = 2; slot <= 4; ++slot) {
        StokesData d = stokes_matrices(flip(t, slot));
        MatrixRF prod = MatrixRF::identity(2);
        for (int l = 1; l <= 6; ++l) prod = prod * stokes_matrix(d, l);
        CHECK((prod * lambda_matrix(d)).is_identity());
        polygon_graph(flip(t, slot), d).validate();
    }

    Triangulation zig = make_triangulation(
        3, {{1, 3, 2}, {3, 5, 3}, {5, 7, 4}, {1, 7, 5}, {3, 7, 6}});
    StokesData d = stokes_matrices(zig);
    MatrixRF prod = MatrixRF::identity(2);
    for (int l = 1; l <= 8; ++l) prod = prod * stokes_matrix(d, l);
    CHECK((prod * lambda_matrix(d)).is_identity());
    polygon_graph(zig, d).validate();
}

TEST_CASE("half form is the quarter quiver structure") {
    std::vector<CheckItem> items;
    check_form(fan_triangulation(1), true, items);
    CHECK(all_ok(items));
    items.clear();
    check_form(fan_triangulation(2), true, items);
    CHECK(all_ok(items));
    items.clear();
    check_form(flip(fan_triangulation(2), 3), false, items);
    CHECK(all_ok(items));
}

TEST_CASE("star graphs carry the same form as the polygon graph") {
    for (int K = 1; K <= 2; ++K) {
        Triangulation t = fan_triangulation(K);
        StokesData d = stokes_matrices(t);
        JumpGraph pg = polygon_graph(t, d);
        pg.validate();
        TwoForm omega = graph_two_form(pg);
        for (bool merged : {true, false}) {
            JumpGraph sg = star_graph(d, merged);
            sg.validate();
            CHECK(graph_two_form(sg).equals(omega));
        }
    }
}

TEST_CASE("squared flip images reproduce the three hexagon dictionaries") {
    Triangulation t = fan_triangulation(2);
    RationalFunction Y1 = sv("y1") * sv("y1"), Y2 = sv("y2") * sv("y2"),
                     Y3 = sv("y3") * sv("y3"), Y4 = sv("y4") * sv("y4");
    RationalFunction one = RationalFunction::one();

    std::vector<RationalFunction> q2 = flip_square_images(t, 2);
    CHECK(rf_equal(q2[0], Y1 * (one + Y2) / Y2));
    CHECK(rf_equal(q2[1], Y2.inverse()));
    CHECK(rf_equal(q2[2], Y2 * Y3 / (one + Y2)));
    CHECK(rf_equal(q2[3], Y4));

    std::vector<RationalFunction> q3 = flip_square_images(t, 3);
    CHECK(rf_equal(q3[0], Y1));
    CHECK(rf_equal(q3[1], Y2 * (one + Y3)));
    CHECK(rf_equal(q3[2], Y3.inverse()));
    CHECK(rf_equal(q3[3], Y3 * Y4 / (one + Y3)));

    std::vector<RationalFunction> q4 = flip_square_images(t, 4);
    CHECK(rf_equal(q4[0], Y1));
    CHECK(rf_equal(q4[1], Y2));
    CHECK(rf_equal(q4[2], Y3 * (one + Y4)));
    CHECK(rf_equal(q4[3], Y4.inverse()));
}

TEST_CASE("flips act on the solved parameters by seed mutation") {
    Comparer cmp(CompareMode::Symbolic, 0, 0);
    Triangulation hex = fan_triangulation(2);
    for (int slot = 2; slot <= 4; ++slot) {
        std::vector<CheckItem> items;
        check_flip_mutation(hex, slot, cmp, items);
        CHECK(all_ok(items));
    }

    Triangulation c3 = make_triangulation(
        3, {{2, 8, 2}, {3, 8, 3}, {3, 6, 4}, {6, 8, 5}, {4, 6, 6}});
    REQUIRE(classify_flip(c3, 3) == 3);
    std::vector<CheckItem> items;
    check_flip_mutation(c3, 3, cmp, items);
    CHECK(all_ok(items));

    Triangulation c4 = make_triangulation(
        3, {{1, 3, 2}, {3, 5, 3}, {5, 7, 4}, {1, 7, 5}, {3, 7, 6}});
    REQUIRE(classify_flip(c4, 6) == 4);
    items.clear();
    check_flip_mutation(c4, 6, cmp, items);
    CHECK(all_ok(items));
}

TEST_CASE("pushforward of the half form is the Flaschka-Newell bracket") {
    Comparer cmp(CompareMode::Symbolic, 0, 0);
    for (int K = 1; K <= 2; ++K) {
        std::vector<CheckItem> items;
        check_fn_pushforward(K, cmp, items);
        CHECK(all_ok(items));
    }
}

TEST_CASE("bracket relations of the framing matrix hold") {
    std::vector<CheckItem> items;
    check_fn_ideal(1, true, 10, 0, items);
    CHECK(all_ok(items));
}
