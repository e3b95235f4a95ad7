#pragma once

#include "geograph/orientation.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace geograph {

struct DegenerateExtent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GeneralPositionClash : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RetryLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Affine squeeze of a configuration into a long, narrow, axis-aligned strip:
/// the frame is rotated so `axis` becomes the first coordinate (x' = p.d,
/// y' = p.north(d)), the second coordinate is scaled by epsilon, and the
/// first is rescaled to span [-1, 1]. The map is invertible, so the halving
/// pairs of the input are exactly the halving pairs of the output.
inline PointConfig squeeze(const PointConfig& c, const Direction& axis, const Rational& epsilon) {
    if (epsilon.sign() <= 0 || Rational(1) < epsilon)
        throw std::invalid_argument("squeeze: epsilon must be in (0, 1]");

    const Rational& t = axis.t;
    AffineMap frame{1, t, -t, 1, 0, 0};

    std::optional<Rational> lo, hi;
    for (const Point& p : c.points()) {
        Rational v = axis.project(p);
        if (!lo || v < *lo) lo = v;
        if (!hi || *hi < v) hi = v;
    }
    if (*lo == *hi) throw DegenerateExtent("squeeze: all points project to one value on the axis");

    Rational span = *hi - *lo;
    AffineMap fit{Rational(2) / span, 0, 0, epsilon, -(*hi + *lo) / span, 0};
    return affine_apply(fit.compose(frame), c);
}

struct CrossResult {
    PointConfig config;
    Geograph geograph;
    // contiguous vertex-index ranges [begin, end) occupied by each input
    std::pair<int, int> first_range;
    std::pair<int, int> second_range;
    int attempts = 0;
};

namespace detail {

/// Recenters so the median projection gap straddles 0, then rescales the
/// first coordinate so the two halves lie beyond -1 and +1.
inline PointConfig center_on_median_gap(const PointConfig& c) {
    std::vector<Rational> xs;
    xs.reserve(static_cast<std::size_t>(c.size()));
    for (const Point& p : c.points()) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    const std::size_t half = xs.size() / 2;
    Rational m1 = xs[half - 1], m2 = xs[half];
    if (m1 == m2) throw std::logic_error("center_on_median_gap: empty median gap");
    Rational gap = m2 - m1;
    AffineMap shift{Rational(2) / gap, 0, 0, 1, -(m1 + m2) / gap, 0};
    return affine_apply(shift, c);
}

inline PointConfig rotate_quarter_turn(const PointConfig& c) {
    return affine_apply(AffineMap{0, -1, 1, 0, 0, 0}, c);
}

inline PointConfig translate(const PointConfig& c, const Rational& dx, const Rational& dy) {
    return affine_apply(AffineMap{1, 0, 0, 1, dx, dy}, c);
}

/// Unordered two-set partition of `group` induced by the line, as the set
/// containing group's smallest index. Assumes no group point is on the line.
inline std::set<int> induced_partition(const std::vector<Point>& pts, const std::vector<int>& group,
                                       const DirectedLine& line) {
    std::set<int> west, east;
    for (int v : group) {
        Side s = side_of(line, pts[static_cast<std::size_t>(v)]);
        (s == Side::West ? west : east).insert(v);
    }
    return west.count(group.front()) ? west : east;
}

/// One block's edges must each balance the other block to zero and must all
/// cut it into one common partition.
inline bool block_splits_other(const std::vector<Point>& pts, const std::vector<Edge>& block_edges,
                               const std::vector<int>& other) {
    if (other.empty() || block_edges.empty()) return true;
    std::optional<std::set<int>> common;
    for (const auto& [i, j] : block_edges) {
        DirectedLine line(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]);
        long balance = 0;
        for (int v : other) {
            Side s = side_of(line, pts[static_cast<std::size_t>(v)]);
            if (s == Side::On) return false;
            balance += (s == Side::West) ? 1 : -1;
        }
        if (balance != 0) return false;
        std::set<int> part = induced_partition(pts, other, line);
        if (!common) common = part;
        else if (*common != part) return false;
    }
    return true;
}

}  // namespace detail

/// Superimposes two configurations as a cross: `a` squeezed into a thin
/// horizontal strip whose halves lie beyond x = -1 and x = +1, `b` squeezed
/// likewise and turned a quarter turn so its halves lie beyond y = -1 and
/// y = +1. For a small enough squeeze every halving line of one block passes
/// between the halves of the other, so the union's halving edges are exactly
/// the two input edge sets, reindexed. Rather than bounding epsilon a
/// priori, the construction recomputes the halving edges of each candidate
/// and halves both epsilons until the verification passes.
///
/// General-position clashes between the two blocks are resolved by nudging
/// b's translation along the deterministic slope sequence before shrinking.
inline CrossResult cross(const PointConfig& a, const PointConfig& b) {
    const Geograph ga = halving_edges(a);
    const Geograph gb = halving_edges(b);
    const Direction da = choose_direction(ga);
    const Direction db = choose_direction(gb);

    const int na = a.size(), nb = b.size();
    std::vector<Edge> expected;
    expected.reserve(ga.edges.size() + gb.edges.size());
    for (const auto& [i, j] : ga.edges) expected.emplace_back(i, j);
    for (const auto& [i, j] : gb.edges) expected.emplace_back(na + i, na + j);

    std::vector<int> a_block(static_cast<std::size_t>(na));
    std::vector<int> b_block(static_cast<std::size_t>(nb));
    for (int i = 0; i < na; ++i) a_block[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < nb; ++i) b_block[static_cast<std::size_t>(i)] = na + i;

    constexpr int kMaxShrinks = 64;
    constexpr int kMaxNudges = 16;

    Rational epsilon(1, 4);
    bool last_failure_was_clash = false;
    for (int attempt = 1; attempt <= kMaxShrinks; ++attempt, epsilon = epsilon / 2) {
        PointConfig strip_a = detail::center_on_median_gap(squeeze(a, da, epsilon));
        PointConfig strip_b =
            detail::rotate_quarter_turn(detail::center_on_median_gap(squeeze(b, db, epsilon)));

        SlopeSequence nudges;
        std::optional<PointConfig> merged;
        for (int k = 0; k < kMaxNudges && !merged; ++k) {
            Rational tau = nudges.next();
            PointConfig placed =
                detail::translate(strip_b, tau * epsilon / 8, tau * epsilon / 16);
            std::vector<Point> pts;
            pts.reserve(static_cast<std::size_t>(na + nb));
            for (const Point& p : strip_a.points()) pts.push_back(p);
            for (const Point& p : placed.points()) pts.push_back(p);
            try {
                merged = PointConfig::make(std::move(pts));
            } catch (const DuplicatePoints&) {
            } catch (const CollinearTriple&) {
            }
        }
        if (!merged) {
            last_failure_was_clash = true;
            continue;
        }
        last_failure_was_clash = false;

        Geograph gu = halving_edges(*merged);
        if (gu.edges != expected) continue;

        std::vector<Edge> b_edges_shifted(gu.edges.begin() + static_cast<long>(ga.edges.size()),
                                          gu.edges.end());
        const auto& pts = merged->points();
        if (!detail::block_splits_other(pts, ga.edges, b_block)) continue;
        if (!detail::block_splits_other(pts, b_edges_shifted, a_block)) continue;

        return CrossResult{std::move(*merged), std::move(gu), {0, na}, {na, na + nb}, attempt};
    }

    if (last_failure_was_clash)
        throw GeneralPositionClash("cross: could not resolve duplicate/collinear clash");
    throw RetryLimitExceeded("cross: verification failed after 64 shrink iterations");
}

}  // namespace geograph
