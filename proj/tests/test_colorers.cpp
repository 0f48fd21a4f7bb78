#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "panchro/colorers.hpp"
#include "panchro/constructions.hpp"
#include "panchro/oracle.hpp"
#include "test_support.hpp"

using namespace panchro;

TEST_CASE("greedy succeeds whenever the edge budget allows fresh vertices") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n = 4 + std::size_t(seed % 6);  // 4..9
        for (std::size_t r = 2; r <= 3 && r <= n; ++r) {
            const std::size_t m = n / r;
            const Hypergraph h = sample_uniform_edges(n, 2 * n, m, derive_seed(5, seed));
            const ColorerOutcome out = greedy_colorer(h, r);
            CHECK(out.attempts == 1);
            REQUIRE(out.coloring.has_value());
            CHECK(out.coloring->num_colors == r);
            CHECK(testsupport::ref_is_panchromatic(h, *out.coloring));
        }
    }
}

TEST_CASE("greedy failure is honest, not a verdict") {
    // the path is 2-colorable, but greedy burns both fresh vertices on the
    // first edge and cannot finish the second
    const Hypergraph path(3, 2, {{0, 1}, {1, 2}});
    CHECK(decide_panchromatic(path, 2).status == OracleStatus::colorable);
    const ColorerOutcome out = greedy_colorer(path, 2);
    CHECK_FALSE(out.coloring.has_value());
    CHECK(out.attempts == 1);
}

TEST_CASE("greedy parameter validation") {
    CHECK_THROWS_AS(greedy_colorer(triangle(), 0), std::invalid_argument);
    CHECK_THROWS_AS(greedy_colorer(triangle(), 3), std::invalid_argument);
    // r == uniformity is fine on a single edge
    const Hypergraph one(4, 3, {{0, 1, 2}});
    REQUIRE(greedy_colorer(one, 3).coloring.has_value());
}

TEST_CASE("alteration palette") {
    CHECK(alteration_palette(10, 2) == 3);
    CHECK(alteration_palette(10, 3) == 4);
    CHECK(alteration_palette(4, 3) == 9);
    CHECK(alteration_palette(16, 2) == 3);
    CHECK(alteration_palette(3, 2) == 4);
    CHECK_THROWS_AS(alteration_palette(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(alteration_palette(4, 1), std::invalid_argument);
}

TEST_CASE("alteration colors instances inside its guarantee") {
    // 19 edges is the largest count where a palette-3 random coloring keeps
    // 2 good colors with constant probability at n = 10
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Hypergraph h = random_uniform_hypergraph(10, 20, 19, derive_seed(17, seed));
        const ColorerOutcome out = alteration_colorer(h, 2, derive_seed(18, seed));
        REQUIRE(out.coloring.has_value());
        CHECK(testsupport::ref_is_panchromatic(h, *out.coloring));
        CHECK(out.stats.size() == out.attempts);
        // every failed attempt kept fewer than r good colors
        for (std::size_t i = 0; i + 1 < out.stats.size(); ++i)
            CHECK(3 - out.stats[i].bad_colors < 2);
    }
}

TEST_CASE("alteration is deterministic in the seed") {
    const Hypergraph h = random_uniform_hypergraph(10, 20, 19, 3);
    const ColorerOutcome a = alteration_colorer(h, 2, 99);
    const ColorerOutcome b = alteration_colorer(h, 2, 99);
    REQUIRE(a.coloring.has_value());
    REQUIRE(b.coloring.has_value());
    CHECK(a.coloring->assignment == b.coloring->assignment);
    CHECK(a.attempts == b.attempts);
}

TEST_CASE("alteration exhausts its retries on an uncolorable instance") {
    const Hypergraph w = shift_witness(ShiftParams{3, 2, 1});
    const ColorerOutcome out = alteration_colorer(w, 2, 7, 25);
    CHECK_FALSE(out.coloring.has_value());
    CHECK(out.attempts == 25);
    CHECK(out.stats.size() == 25);
}

TEST_CASE("skeleton distance") {
    const SkeletonPoint p{0, 1, 0.3};
    CHECK(skeleton_dist(p, 0) == doctest::Approx(0.3));
    CHECK(skeleton_dist(p, 1) == doctest::Approx(0.7));
    CHECK(skeleton_dist(p, 2) == doctest::Approx(1.3));  // exit via the nearer endpoint
    const SkeletonPoint q{1, 3, 0.8};
    CHECK(skeleton_dist(q, 0) == doctest::Approx(1.2));
    CHECK(skeleton_dist(q, 3) == doctest::Approx(0.2));
}

TEST_CASE("skeleton sampling: shape and determinism") {
    Rng a(21), b(21);
    const auto pa = sample_skeleton_points(40, 4, a);
    const auto pb = sample_skeleton_points(40, 4, b);
    REQUIRE(pa.size() == 40);
    for (std::size_t i = 0; i < pa.size(); ++i) {
        CHECK(pa[i].u < pa[i].w);
        CHECK(pa[i].w < 4);
        CHECK(pa[i].param >= 0.0);
        CHECK(pa[i].param < 1.0);
        CHECK(pa[i].u == pb[i].u);
        CHECK(pa[i].w == pb[i].w);
        CHECK(pa[i].param == pb[i].param);
    }
    Rng c(0);
    const auto two = sample_skeleton_points(10, 2, c);
    for (const SkeletonPoint& p : two) {
        CHECK(p.u == 0);
        CHECK(p.w == 1);
    }
    Rng d(0);
    CHECK_THROWS_AS(sample_skeleton_points(3, 1, d), std::invalid_argument);
}

TEST_CASE("demand map on hand-placed points") {
    const Hypergraph h(3, 3, {{0, 1, 2}});
    const std::vector<SkeletonPoint> pts{{0, 1, 0.2}, {1, 2, 0.4}, {0, 2, 0.9}};
    const DemandMap dm = build_demand_map(h, pts, 3);
    REQUIRE(dm.demanded.size() == 3);
    CHECK(dm.demanded[0] == 0);  // color 0: nearest is vertex 0 at 0.2
    CHECK(dm.demanded[1] == 1);  // color 1: nearest is vertex 1 at 0.4
    CHECK(dm.demanded[2] == 2);  // color 2: nearest is vertex 2 at 0.1
    CHECK(dm.conflicts.empty());
}

TEST_CASE("demand map: conflicts and tie-breaking") {
    const Hypergraph h(2, 2, {{0, 1}});
    // vertex 0 is nearest for colors 0 and 1; vertex 1 owns color 2
    const std::vector<SkeletonPoint> near0{{0, 1, 0.5}, {0, 2, 0.9}};
    const DemandMap dm = build_demand_map(h, near0, 3);
    CHECK(dm.demanded[0] == 0);
    CHECK(dm.demanded[1] == 0);
    CHECK(dm.demanded[2] == 1);
    REQUIRE(dm.conflicts.size() == 1);
    CHECK(dm.conflicts[0].vertex == 0);
    CHECK(dm.conflicts[0].color_a == 0);
    CHECK(dm.conflicts[0].color_b == 1);

    // exact ties go to the smallest vertex
    const std::vector<SkeletonPoint> tied{{0, 1, 0.3}, {0, 1, 0.3}};
    const DemandMap tm = build_demand_map(h, tied, 2);
    CHECK(tm.demanded[0] == 0);
    CHECK(tm.demanded[1] == 0);
    REQUIRE(tm.conflicts.size() == 1);

    CHECK_THROWS_AS(build_demand_map(triangle(), near0, 3), std::invalid_argument);
}

TEST_CASE("simplex palette") {
    CHECK(simplex_palette(10, 2) == 3);
    CHECK(simplex_palette(9, 3) == 4);
    CHECK(simplex_palette(4, 3) == 6);
    CHECK(simplex_palette(3, 2) == 4);
    CHECK_THROWS_AS(simplex_palette(4, 1), std::invalid_argument);
}

TEST_CASE("simplex colorer succeeds on sparse instances") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Hypergraph h = random_uniform_hypergraph(9, 18, 6, derive_seed(23, seed));
        const std::size_t palette = simplex_palette(9, 2);
        const ColorerOutcome out = simplex_colorer(h, 2, palette, derive_seed(24, seed));
        REQUIRE(out.coloring.has_value());
        CHECK(testsupport::ref_is_panchromatic(h, *out.coloring));
        CHECK(out.stats.size() == out.attempts);
    }
}

TEST_CASE("simplex colorer: single edge and the documented palette-5 setting") {
    // one edge cannot self-conflict across distinct colors at distinct vertices
    const Hypergraph one(3, 3, {{0, 1, 2}});
    const ColorerOutcome out = simplex_colorer(one, 2, 2, 13);
    REQUIRE(out.coloring.has_value());
    CHECK(testsupport::ref_is_panchromatic(one, *out.coloring));

    CHECK(simplex_palette(16, 4) == 5);
    const Hypergraph h = random_uniform_hypergraph(16, 32, 5, 61);
    const ColorerOutcome big = simplex_colorer(h, 4, 5, 62, 1000);
    REQUIRE(big.coloring.has_value());
    CHECK(big.attempts <= 1000);
    CHECK(testsupport::ref_is_panchromatic(h, *big.coloring));
}

TEST_CASE("skeleton distance is a path metric on sampled triples") {
    Rng rng(77);
    const auto pts = sample_skeleton_points(200, 5, rng);
    for (const SkeletonPoint& p : pts)
        for (ColorId v1 = 0; v1 < 5; ++v1) {
            CHECK(skeleton_dist(p, v1) >= 0.0);
            CHECK(skeleton_dist(p, v1) <= 1.5);
            for (ColorId v2 = ColorId(v1 + 1); v2 < 5; ++v2)
                // vertex-to-vertex distance is 1 along the skeleton
                CHECK(skeleton_dist(p, v1) + skeleton_dist(p, v2) >= 1.0 - 1e-12);
        }
}

TEST_CASE("simplex colorer: determinism and retry exhaustion") {
    const Hypergraph h = random_uniform_hypergraph(9, 18, 6, 4);
    const ColorerOutcome a = simplex_colorer(h, 2, 3, 55);
    const ColorerOutcome b = simplex_colorer(h, 2, 3, 55);
    REQUIRE(a.coloring.has_value());
    CHECK(a.coloring->assignment == b.coloring->assignment);
    CHECK(a.attempts == b.attempts);

    const Hypergraph w = shift_witness(ShiftParams{3, 2, 1});
    const ColorerOutcome out = simplex_colorer(w, 2, simplex_palette(3, 2), 7, 20);
    CHECK_FALSE(out.coloring.has_value());
    CHECK(out.attempts == 20);

    CHECK_THROWS_AS(simplex_colorer(h, 1, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(simplex_colorer(h, 3, 2, 0), std::invalid_argument);
}

TEST_CASE("colorer successes are always genuinely panchromatic") {
    // cross-check all three colorers against the exact oracle
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const Hypergraph h = random_uniform_hypergraph(6, 12, 3, derive_seed(41, seed));
        for (std::size_t r = 2; r <= 3; ++r) {
            const ColorerOutcome g = greedy_colorer(h, r);
            const ColorerOutcome a = alteration_colorer(h, r, seed);
            const ColorerOutcome s =
                simplex_colorer(h, r, simplex_palette(6, r), seed);
            for (const ColorerOutcome* out : {&g, &a, &s})
                if (out->coloring) {
                    CHECK(out->coloring->num_colors == r);
                    CHECK(testsupport::ref_is_panchromatic(h, *out->coloring));
                }
            if (g.coloring || a.coloring || s.coloring)
                CHECK(decide_panchromatic(h, r).status == OracleStatus::colorable);
        }
    }
}
