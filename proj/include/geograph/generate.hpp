#pragma once

#include "geograph/geometry.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace geograph {

struct ExhaustedSampling : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Shape { Convex, Star, Random };

inline const char* to_string(Shape s) {
    switch (s) {
        case Shape::Convex: return "convex";
        case Shape::Star: return "star";
        default: return "random";
    }
}

struct GeneratorSpec {
    Shape shape = Shape::Random;
    int n = 4;
    std::uint64_t seed = 0;
    long bound = 1000;
};

namespace detail {

/// n integer points on the parabola y = x^2: strictly convex position, and
/// no three points of a parabola are ever collinear.
inline PointConfig convex_arc(int n) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        long k = i - n / 2;
        pts.push_back({Rational(k), Rational(k * k)});
    }
    return PointConfig::make(std::move(pts));
}

/// Rejection sampling on the integer grid [-bound, bound]^2. The generator
/// is mt19937_64 seeded directly; each coordinate is drawn as
/// rng() % (2*bound + 1) - bound. Documented in the README; reproducibility
/// is needed within this implementation only.
inline PointConfig random_config(int n, std::uint64_t seed, long bound) {
    std::mt19937_64 rng(seed);
    const std::uint64_t width = 2 * static_cast<std::uint64_t>(bound) + 1;
    auto draw = [&]() -> long {
        return static_cast<long>(rng() % width) - bound;
    };

    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    int consecutive_rejections = 0;
    while (static_cast<int>(pts.size()) < n) {
        Point candidate{Rational(draw()), Rational(draw())};
        bool ok = true;
        for (std::size_t i = 0; ok && i < pts.size(); ++i) {
            if (pts[i] == candidate) ok = false;
            for (std::size_t j = i + 1; ok && j < pts.size(); ++j)
                if (orient(pts[i], pts[j], candidate) == 0) ok = false;
        }
        if (!ok) {
            if (++consecutive_rejections >= 10000)
                throw ExhaustedSampling("generate: 10000 consecutive rejections (bound " +
                                        std::to_string(bound) + " too small for n = " +
                                        std::to_string(n) + ")");
            continue;
        }
        consecutive_rejections = 0;
        pts.push_back(std::move(candidate));
    }
    return PointConfig::make(std::move(pts));
}

}  // namespace detail

/// Named configurations: `convex` puts n points on an integer parabola arc,
/// `star` is the fixed 4-point triangle-hull pattern, `random` draws integer
/// points in general position from a seeded generator.
inline PointConfig generate(const GeneratorSpec& spec) {
    if (spec.n % 2 != 0) throw OddSize("generate: n must be even");
    if (spec.bound < 1) throw std::invalid_argument("generate: bound must be positive");
    switch (spec.shape) {
        case Shape::Convex:
            if (spec.n < 4) throw std::invalid_argument("generate: convex needs n >= 4");
            return detail::convex_arc(spec.n);
        case Shape::Star:
            if (spec.n != 4) throw std::invalid_argument("generate: star is a 4-point pattern");
            return PointConfig::make({{Rational(0), Rational(0)},
                                      {Rational(4), Rational(0)},
                                      {Rational(2), Rational(4)},
                                      {Rational(2), Rational(1)}});
        default:
            if (spec.n < 2) throw std::invalid_argument("generate: random needs n >= 2");
            return detail::random_config(spec.n, spec.seed, spec.bound);
    }
}

}  // namespace geograph
