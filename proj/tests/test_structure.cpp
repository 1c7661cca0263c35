#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "multitri/enumeration.hpp"
#include "multitri/flips.hpp"
#include "multitri/structure.hpp"

using namespace multitri;

namespace {

// random walk building a chain: start at a length-(k+1) edge, extend one step
// at either end while room remains
std::vector<Edge> random_chain(const GonContext& g, std::mt19937& rng) {
    int lo = static_cast<int>(rng() % g.n);
    int hi = (lo + g.k + 1) % g.n;
    std::vector<Edge> chain = {Edge(lo, hi)};
    for (int len = g.k + 2; len <= g.n - g.k - 1; ++len) {
        if (rng() % 2)
            lo = (lo + g.n - 1) % g.n;
        else
            hi = (hi + 1) % g.n;
        chain.emplace_back(lo, hi);
    }
    return chain;
}

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("ears of the octagon fan") {
    GonContext g(8, 2);
    KTriangulation t = t_min(g);
    CHECK(k_ears(t) == std::vector<Edge>{Edge(0, 3), Edge(0, 5), Edge(1, 4), Edge(1, 6)});
    GonContext g6(6, 2);
    CHECK_THROWS_AS(k_ears(KTriangulation(g6, {Edge(1, 4), Edge(2, 5)})),
                    std::invalid_argument);
}

TEST_CASE("every (8,2) triangulation has at least k ears") {
    GonContext g(8, 2);
    for (const KTriangulation& t : all_triangulations(g)) CHECK(k_ears(t).size() >= 2);
}

TEST_CASE("positive ears split the ear supply star by star") {
    GonContext g(8, 2);
    KTriangulation t = t_min(g);
    std::vector<KStar> stars = extract_stars(t);
    REQUIRE(stars.size() == 4);
    CHECK(positive_ears(stars[0], t) == std::vector<Edge>{Edge(0, 3), Edge(1, 4)});
    CHECK(positive_ears(stars[1], t).empty());
    CHECK(positive_ears(stars[2], t).empty());
    CHECK(positive_ears(stars[3], t) == std::vector<Edge>{Edge(0, 5), Edge(1, 6)});

    for (const KTriangulation& u : all_triangulations(g)) {
        std::vector<KStar> us = extract_stars(u);
        std::vector<Edge> ears = k_ears(u);
        std::size_t total = 0;
        for (const KStar& s : us) {
            std::vector<Edge> pe = positive_ears(s, u);
            total += pe.size();
            // one fewer than the star's length-k edge count
            int short_edges = 0;
            for (Edge e : star_edges(s))
                if (edge_length(g, e) == g.k) ++short_edges;
            if (short_edges > 0) CHECK(static_cast<int>(pe.size()) == short_edges - 1);
            for (Edge e : pe) {
                CHECK(std::count(ears.begin(), ears.end(), e) == 1);
                CHECK(is_positive_ear(s, u, e));
            }
        }
        CHECK(total == ears.size());
    }

    GonContext g9(9, 2);
    CHECK_THROWS_AS(positive_ears(extract_stars(t_min(g9))[0], t),
                    std::invalid_argument);  // star of a different triangulation
}

TEST_CASE("star classification marks the fan stars external") {
    GonContext g(8, 2);
    StarClassification c = classify_stars(t_min(g));
    CHECK(c.internal.empty());
    CHECK(c.external.size() == 4);

    // lexicographically first non-colorable octagon triangulation: one
    // internal star, and the counts match up
    KTriangulation bad(g, {Edge(0, 3), Edge(0, 4), Edge(0, 5), Edge(1, 4), Edge(1, 6), Edge(3, 6)});
    StarClassification cb = classify_stars(bad);
    CHECK(cb.internal.size() == 1);
    CHECK(cb.external.size() == 3);
    for (const KStar& s : cb.internal)
        for (Edge e : star_edges(s)) CHECK(edge_length(g, e) > g.k);
}

TEST_CASE("chains are accordions, one non-chain 7-gon triangulation is not") {
    GonContext g(7, 1);
    // triangle-fan shape with ears [0,2],[2,4],[4,6]: not a chain, though its
    // spans 2,2,2,3 are 2-crossing-free
    std::vector<Edge> three_ears = {Edge(0, 2), Edge(2, 4), Edge(4, 6), Edge(0, 4)};
    CHECK(is_k_triangulation(g, three_ears));
    CHECK(max_crossing_size(g, three_ears) == 1);
    CHECK_FALSE(is_accordion(g, three_ears));

    CHECK(is_accordion(g, std::vector<Edge>{Edge(0, 2), Edge(0, 3), Edge(0, 4), Edge(0, 5)}));
    CHECK(is_accordion(g, std::vector<Edge>{}));          // trivially a chain
    CHECK(is_accordion(g, std::vector<Edge>{Edge(2, 4)}));

    std::mt19937 rng(77);
    for (auto [n, k] : {std::pair{9, 2}, {11, 3}, {10, 1}}) {
        GonContext gc(n, k);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Edge> chain = random_chain(gc, rng);
            std::shuffle(chain.begin(), chain.end(), rng);
            CHECK(is_accordion(gc, chain));
            CHECK(max_crossing_size(gc, chain) == 1);
        }
        CHECK(is_accordion(gc, zigzag(gc, 3)));
    }
}

TEST_CASE("accordion decompositions recover fans and zigzags") {
    GonContext g(8, 2);
    auto dec = accordion_decomposition(t_min(g));
    REQUIRE(dec.has_value());
    REQUIRE(dec->size() == 2);
    CHECK((*dec)[0] == std::vector<Edge>{Edge(0, 3), Edge(0, 4), Edge(0, 5)});
    CHECK((*dec)[1] == std::vector<Edge>{Edge(1, 4), Edge(1, 5), Edge(1, 6)});

    // the union of two rotated zigzags decomposes back into them
    GonContext g10(10, 2);
    std::vector<Edge> z0 = zigzag(g10, 0), z1 = zigzag(g10, 1);
    std::vector<Edge> uni = z0;
    uni.insert(uni.end(), z1.begin(), z1.end());
    KTriangulation zz(g10, uni);
    auto zdec = accordion_decomposition(zz);
    REQUIRE(zdec.has_value());
    REQUIRE(zdec->size() == 2);
    auto sorted = [](std::vector<Edge> v) { std::sort(v.begin(), v.end()); return v; };
    CHECK(sorted((*zdec)[0]) == z0);
    CHECK(sorted((*zdec)[1]) == z1);
    for (const auto& acc : *zdec) CHECK(is_accordion(g10, acc));

    // pentagon: k accordions, all empty
    GonContext g5(5, 2);
    auto pdec = accordion_decomposition(KTriangulation(g5, {}));
    REQUIRE(pdec.has_value());
    CHECK(pdec->size() == 2);
    for (const auto& acc : *pdec) CHECK(acc.empty());

    // seeding with the ears in any order gives the same partition
    std::vector<Edge> seeds = k_ears(t_min(g));
    std::reverse(seeds.begin(), seeds.end());
    auto seeded = accordion_decomposition(t_min(g), seeds);
    REQUIRE(seeded.has_value());
    std::vector<std::vector<Edge>> a = *dec, b = *seeded;
    for (auto& acc : a) std::sort(acc.begin(), acc.end());
    for (auto& acc : b) std::sort(acc.begin(), acc.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("colorability, decomposition, and internal stars agree on the octagon") {
    GonContext g(8, 2);
    int colorable = 0;
    for (const KTriangulation& t : all_triangulations(g)) {
        bool c = is_k_colorable(t);
        CHECK(c == accordion_decomposition(t).has_value());
        CHECK(c == classify_stars(t).internal.empty());
        std::optional<Coloring> col = color(t);
        CHECK(c == col.has_value());
        if (col) {
            CHECK(valid_coloring(t, *col));
            ++colorable;
        }
    }
    CHECK(colorable == 68);
}

TEST_CASE("coloring validation rejects rigged colorings") {
    GonContext g(8, 2);
    KTriangulation t = t_min(g);
    Coloring c = *color(t);
    CHECK(valid_coloring(t, c));

    Coloring clash = c;
    clash[Edge(0, 4)] = clash[Edge(1, 5)];  // crossing pair, same color
    CHECK_FALSE(valid_coloring(t, clash));

    Coloring missing = c;
    missing.erase(Edge(1, 6));
    CHECK_FALSE(valid_coloring(t, missing));

    Coloring out_of_range = c;
    out_of_range[Edge(0, 3)] = 2;
    CHECK_FALSE(valid_coloring(t, out_of_range));

    GonContext g7(7, 1);
    KTriangulation one(g7, {Edge(0, 2), Edge(2, 4), Edge(4, 6), Edge(0, 4)});
    CHECK(is_k_colorable(one));  // k = 1 always works
    CHECK(valid_coloring(one, *color(one)));
}

TEST_CASE("long-edge counts meet the colorable bound") {
    GonContext g(8, 2);
    int strict = 0;
    for (const KTriangulation& t : all_triangulations(g)) {
        bool col = is_k_colorable(t);
        for (int p = g.k; p <= (g.n - 1) / 2; ++p) {
            int have = p_relevant_count(t, p);
            int bound = g.k * (g.n - 2 * p - 1);
            CHECK(have <= bound);
            if (col) CHECK(have == bound);
            if (have < bound) ++strict;
        }
    }
    CHECK(strict == 16);
    CHECK(p_relevant_count(t_min(g), 2) == 6);
    CHECK(p_relevant_count(t_min(g), 3) == 2);  // [0,4] and [1,5]
    CHECK_THROWS_AS(p_relevant_count(t_min(g), 1), std::invalid_argument);
    CHECK_THROWS_AS(p_relevant_count(t_min(g), 4), std::invalid_argument);
}

}  // TEST_SUITE
