#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace geograph;

TEST_CASE("convex arcs give the polygon matching", "[generate]") {
    CHECK(halving_edges(generate({Shape::Convex, 4})).edges.size() == 2);
    for (int n = 4; n <= 16; n += 2) {
        Geograph g = halving_edges(generate({Shape::Convex, n}));
        CHECK(static_cast<int>(g.edges.size()) == n / 2);
        for (int d : g.degrees()) CHECK(d == 1);
        CHECK(static_cast<int>(components(g).classes.size()) == n / 2);
    }
}

TEST_CASE("star pattern has three edges through one vertex", "[generate]") {
    Geograph g = halving_edges(generate({Shape::Star, 4}));
    CHECK(g.edges.size() == 3);
    auto deg = g.degrees();
    CHECK(std::count(deg.begin(), deg.end(), 3) == 1);
    CHECK(std::count(deg.begin(), deg.end(), 1) == 3);
}

TEST_CASE("random generation is deterministic per seed", "[generate]") {
    GeneratorSpec spec{Shape::Random, 10, 42, 100};
    CHECK(generate(spec) == generate(spec));
    GeneratorSpec other{Shape::Random, 10, 43, 100};
    CHECK_FALSE(generate(spec) == generate(other));
}

TEST_CASE("random configurations are in general position", "[generate]") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 99ull}) {
        // construction would throw if the invariants were violated
        PointConfig c = generate({Shape::Random, 12, seed, 30});
        CHECK(c.size() == 12);
        for (const Point& p : c.points()) {
            CHECK(Rational(-30) <= p.x);
            CHECK(p.x <= Rational(30));
            CHECK(Rational(-30) <= p.y);
            CHECK(p.y <= Rational(30));
        }
    }
}

TEST_CASE("generator input validation", "[generate]") {
    CHECK_THROWS_AS(generate({Shape::Random, 7}), OddSize);
    CHECK_THROWS_AS(generate({Shape::Convex, 2}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Shape::Star, 6}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Shape::Random, 4, 0, 0}), std::invalid_argument);
}

TEST_CASE("sampling gives up when the grid is too small", "[generate]") {
    // 3x3 grid holds at most 9 points, so 10 can never be placed
    CHECK_THROWS_AS(generate({Shape::Random, 10, 1, 1}), ExhaustedSampling);
}
