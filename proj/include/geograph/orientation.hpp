#pragma once

#include "geograph/halving.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace geograph {

/// Deterministic enumeration of candidate slopes:
///   0, 1, -1, 1/2, -1/2, 1/3, -1/3, 2/3, -2/3, 1/4, ...
/// i.e. 0 first, then reduced p/q by ascending denominator q, numerators
/// 1, -1, 2, -2, ... with |p| <= q. Every caller that needs "the first
/// value that works" walks this same sequence, so outputs are reproducible.
class SlopeSequence {
public:
    Rational next() {
        if (!started_) {
            started_ = true;
            return Rational(0);
        }
        for (;;) {
            advance();
            if (std::gcd(p_ > 0 ? p_ : -p_, q_) == 1) return Rational(p_, q_);
        }
    }

private:
    void advance() {
        if (q_ == 0) {
            q_ = 1;
            p_ = 1;
            return;
        }
        if (p_ > 0) {
            p_ = -p_;
            return;
        }
        p_ = -p_ + 1;
        if (p_ > q_) {
            ++q_;
            p_ = 1;
        }
    }

    bool started_ = false;
    long p_ = 0;
    long q_ = 0;
};

/// A generic direction d = (1, t). East is d; North is d rotated +90
/// degrees, i.e. (-t, 1). Valid for a geograph when all vertex projections
/// onto d are distinct (which also rules out edges perpendicular to d).
struct Direction {
    Rational t;

    Rational project(const Point& p) const { return p.x + t * p.y; }
};

inline bool direction_valid(const Geograph& g, const Direction& d) {
    std::vector<Rational> proj;
    proj.reserve(static_cast<std::size_t>(g.size()));
    for (const Point& p : g.config.points()) proj.push_back(d.project(p));
    std::sort(proj.begin(), proj.end());
    for (std::size_t k = 0; k + 1 < proj.size(); ++k)
        if (proj[k] == proj[k + 1]) return false;
    return true;
}

/// First slope in the deterministic sequence giving pairwise distinct
/// projections. Terminates: each tie rules out exactly one slope value and
/// the sequence is infinite.
inline Direction choose_direction(const Geograph& g) {
    SlopeSequence seq;
    for (;;) {
        Direction d{seq.next()};
        if (direction_valid(g, d)) return d;
    }
}

/// Geograph plus a valid direction. `order` lists vertex indices by
/// ascending projection; `rank` is its inverse. The left half is the first
/// n/2 entries of `order`, the right half the last n/2.
class OrientedGeograph {
public:
    static OrientedGeograph make(Geograph g, Direction d) {
        if (!direction_valid(g, d))
            throw std::invalid_argument("OrientedGeograph: direction gives tied projections");
        return OrientedGeograph(std::move(g), d);
    }

    static OrientedGeograph make(Geograph g) {
        Direction d = choose_direction(g);
        return OrientedGeograph(std::move(g), d);
    }

    const Geograph& geograph() const { return g_; }
    const Direction& direction() const { return dir_; }
    int size() const { return g_.size(); }

    const std::vector<int>& order() const { return order_; }
    int rank(int v) const { return rank_[static_cast<std::size_t>(v)]; }

    std::vector<int> left_half() const {
        return {order_.begin(), order_.begin() + g_.size() / 2};
    }
    std::vector<int> right_half() const {
        return {order_.begin() + g_.size() / 2, order_.end()};
    }
    bool in_left_half(int v) const { return rank(v) < g_.size() / 2; }

    int left_degree(int v) const {
        detail::check_vertex(g_.config, v, "left_degree");
        int count = 0;
        for (const auto& [i, j] : g_.edges) {
            if (i == v && rank(j) < rank(v)) ++count;
            if (j == v && rank(i) < rank(v)) ++count;
        }
        return count;
    }

    int right_degree(int v) const {
        detail::check_vertex(g_.config, v, "right_degree");
        int count = 0;
        for (const auto& [i, j] : g_.edges) {
            if (i == v && rank(j) > rank(v)) ++count;
            if (j == v && rank(i) > rank(v)) ++count;
        }
        return count;
    }

private:
    OrientedGeograph(Geograph g, Direction d) : g_(std::move(g)), dir_(d) {
        const int n = g_.size();
        order_.resize(static_cast<std::size_t>(n));
        std::iota(order_.begin(), order_.end(), 0);
        std::vector<Rational> proj;
        proj.reserve(static_cast<std::size_t>(n));
        for (const Point& p : g_.config.points()) proj.push_back(dir_.project(p));
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            return proj[static_cast<std::size_t>(a)] < proj[static_cast<std::size_t>(b)];
        });
        rank_.resize(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) rank_[static_cast<std::size_t>(order_[static_cast<std::size_t>(k)])] = k;
    }

    Geograph g_;
    Direction dir_;
    std::vector<int> order_;
    std::vector<int> rank_;
};

/// Left and right halves by projection order.
inline std::pair<std::vector<int>, std::vector<int>> halves(const OrientedGeograph& og) {
    return {og.left_half(), og.right_half()};
}

}  // namespace geograph
