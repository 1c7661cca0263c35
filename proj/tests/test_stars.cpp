#include <doctest.h>

#include <stdexcept>

#include "multitri/enumeration.hpp"
#include "multitri/stars.hpp"

using namespace multitri;

TEST_SUITE("stars") {

TEST_CASE("pentagon: one star using every vertex") {
    GonContext g(5, 2);
    KTriangulation t(g, {});
    std::vector<KStar> stars = extract_stars(t);
    REQUIRE(stars.size() == 1);
    const KStar& s = stars[0];
    CHECK(s.circle_order == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(star_order(s) == std::vector<int>{0, 2, 4, 1, 3});
    CHECK(star_order_from(s, 4) == std::vector<int>{4, 1, 3, 0, 2});
    CHECK(star_edges(s) == boundary_edges(g));  // the pentagram: every length-2 chord
    CHECK(star_angle_at(s, 0) == Angle{3, 0, 2});

    CHECK_THROWS_AS(KStar(g, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(KStar(g, {0, 1, 2, 3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(star_order_from(s, 5), std::invalid_argument);
    CHECK_THROWS_AS(star_angle_at(s, 5), std::invalid_argument);
}

TEST_CASE("hexagon: two pentagonal stars sharing both relevant edges") {
    GonContext g(6, 2);
    KTriangulation t(g, {Edge(1, 4), Edge(2, 5)});
    std::vector<KStar> stars = extract_stars(t);
    REQUIRE(stars.size() == 2);
    const KStar& s1 = stars[0];
    const KStar& s2 = stars[1];
    CHECK(s1.circle_order == std::vector<int>{0, 1, 2, 4, 5});
    CHECK(s2.circle_order == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(star_edges(s1) ==
          std::vector<Edge>{Edge(0, 2), Edge(0, 4), Edge(1, 4), Edge(1, 5), Edge(2, 5)});
    CHECK(star_edges(s2) ==
          std::vector<Edge>{Edge(1, 3), Edge(1, 4), Edge(2, 4), Edge(2, 5), Edge(3, 5)});
    CHECK(s1.contains_vertex(0));
    CHECK_FALSE(s1.contains_vertex(3));

    // the gap of s1's angle at 0 is ]2,4[, so [0,3] bisects it
    CHECK(star_angle_at(s1, 0) == Angle{4, 0, 2});
    CHECK(star_bisects(s1, Edge(0, 3)));
    CHECK_FALSE(star_bisects(s1, Edge(1, 3)));
    CHECK_FALSE(star_bisects(s2, Edge(2, 0)));

    CommonBisector cb = common_bisector(s1, s2);
    CHECK(cb.edge == Edge(0, 3));
    CHECK(cb.first_vertex == 0);
    CHECK(cb.second_vertex == 3);
    CommonBisector swapped = common_bisector(s2, s1);
    CHECK(swapped.edge == Edge(0, 3));
    CHECK(swapped.first_vertex == 3);
    CHECK(swapped.second_vertex == 0);

    auto inc = star_incidences(t, stars);
    CHECK(inc.size() == t.all_edges().size());
    CHECK(inc.at(Edge(1, 4)).size() == 2);
    CHECK(inc.at(Edge(2, 5)).size() == 2);
    CHECK(inc.at(Edge(0, 2)) == std::vector<KStar>{s1});
    CHECK(inc.at(Edge(1, 3)) == std::vector<KStar>{s2});
    CHECK(inc.at(Edge(0, 1)).empty());
}

TEST_CASE("sides: count comparison, orientation flip, balanced ties rejected") {
    GonContext g(6, 2);
    KStar s1(g, {0, 1, 2, 4, 5});
    CHECK(star_side(s1, 2, 4) == Side::Positive);   // [2,4] holds 2 star vertices, [4,2] holds 5
    CHECK(star_side(s1, 4, 2) == Side::Negative);
    CHECK_THROWS_AS(star_side(s1, 3, 0), std::invalid_argument);  // 3 on each side
    CHECK_THROWS_AS(star_side(s1, 2, 2), std::invalid_argument);
}

TEST_CASE("octagon fan: stars pile up on vertices 0 and 1") {
    GonContext g(8, 2);
    KTriangulation t(g, {Edge(0, 3), Edge(0, 4), Edge(0, 5), Edge(1, 4), Edge(1, 5), Edge(1, 6)});
    std::vector<KStar> stars = extract_stars(t);
    REQUIRE(stars.size() == 4);
    CHECK(stars[0].circle_order == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(stars[1].circle_order == std::vector<int>{0, 1, 3, 4, 5});
    CHECK(stars[2].circle_order == std::vector<int>{0, 1, 4, 5, 6});
    CHECK(stars[3].circle_order == std::vector<int>{0, 1, 5, 6, 7});
    for (const KStar& s : stars) {
        CHECK(s.contains_vertex(0));
        CHECK(s.contains_vertex(1));
    }
}

TEST_CASE("positive-side counts follow the arc-length law on every (7,2) triangulation") {
    GonContext g(7, 2);
    for (const KTriangulation& t : all_triangulations(g)) {
        std::vector<KStar> stars = extract_stars(t);
        for (Edge e : t.all_edges()) {
            if (edge_length(g, e) < g.k) continue;
            for (auto [u, v] : {std::pair{e.a, e.b}, {e.b, e.a}}) {
                int want = ccw_steps(g, v, u) - g.k;
                CHECK(stars_on_positive_side(t, u, v) == want);
                CHECK(stars_on_positive_side(stars, u, v) == want);
            }
        }
    }
}

TEST_CASE("positive-side counting rejects edges outside the triangulation") {
    GonContext g(6, 2);
    KTriangulation t(g, {Edge(1, 4), Edge(2, 5)});
    CHECK_THROWS_AS(stars_on_positive_side(t, 0, 1), std::invalid_argument);  // too short
    CHECK_THROWS_AS(stars_on_positive_side(t, 0, 3), std::invalid_argument);  // relevant, absent
    CHECK(stars_on_positive_side(t, 1, 4) == 1);
    CHECK(stars_on_positive_side(t, 4, 1) == 1);
    CHECK(stars_on_positive_side(t, 0, 2) == 2);  // boundary edge: everything is positive
}

}  // TEST_SUITE
