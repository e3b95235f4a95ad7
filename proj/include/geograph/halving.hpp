#pragma once

#include "geograph/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace geograph {

using Edge = std::pair<int, int>;

inline Edge make_edge(int i, int j) { return {std::min(i, j), std::max(i, j)}; }

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// A point configuration together with its halving edges: (i, j) is an edge
/// when the line through points i and j splits the remaining n-2 points into
/// two equal halves. Edges are stored as (min, max) pairs in lexicographic
/// order, so serialized output is stable.
struct Geograph {
    PointConfig config;
    std::vector<Edge> edges;

    int size() const { return config.size(); }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(config.size()));
        for (const auto& [i, j] : edges) {
            adj[static_cast<std::size_t>(i)].push_back(j);
            adj[static_cast<std::size_t>(j)].push_back(i);
        }
        return adj;
    }

    std::vector<int> degrees() const {
        std::vector<int> deg(static_cast<std::size_t>(config.size()), 0);
        for (const auto& [i, j] : edges) {
            ++deg[static_cast<std::size_t>(i)];
            ++deg[static_cast<std::size_t>(j)];
        }
        return deg;
    }
};

namespace detail {

inline void check_vertex(const PointConfig& c, int v, const char* what) {
    if (v < 0 || v >= c.size())
        throw IndexOutOfRange(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
}

/// Balance of the remaining points about the line through i and j, on the
/// integer-scaled view.
inline long pair_balance(const ScaledPoints& sp, int i, int j) {
    long balance = 0;
    const int n = static_cast<int>(sp.size());
    for (int r = 0; r < n; ++r) {
        if (r == i || r == j) continue;
        int s = sp.orient(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                          static_cast<std::size_t>(r));
        balance += (s > 0) - (s < 0);
    }
    return balance;
}

}  // namespace detail

inline bool is_halving_pair(const PointConfig& c, int i, int j) {
    detail::check_vertex(c, i, "is_halving_pair");
    detail::check_vertex(c, j, "is_halving_pair");
    if (i == j) throw std::invalid_argument("is_halving_pair: i == j");
    detail::ScaledPoints sp(c.points());
    return detail::pair_balance(sp, i, j) == 0;
}

/// Definition-level halving computation: test all n(n-1)/2 pairs by counting
/// sides of the remaining points. O(n^3), exact, and the reference everything
/// else is checked against.
inline Geograph halving_edges(const PointConfig& c) {
    detail::ScaledPoints sp(c.points());
    const int n = c.size();
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (detail::pair_balance(sp, i, j) == 0) edges.emplace_back(i, j);
    return Geograph{c, std::move(edges)};
}

namespace detail {

/// Angular comparator around a pivot: vectors sorted by angle in [0, 2pi),
/// starting at the positive x-axis. General position guarantees no two
/// vectors are parallel, so this is a strict total order.
struct AngularOrder {
    const ScaledPoints& sp;
    std::size_t pivot;

    int half(std::size_t v) const {
        int sy = mpz_cmp(sp.y[v].get_mpz_t(), sp.y[pivot].get_mpz_t());
        if (sy != 0) return sy > 0 ? 0 : 1;
        return mpz_cmp(sp.x[v].get_mpz_t(), sp.x[pivot].get_mpz_t()) > 0 ? 0 : 1;
    }

    bool operator()(std::size_t a, std::size_t b) const {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        return sp.orient(pivot, a, b) > 0;
    }
};

}  // namespace detail

/// Optimized enumeration: for each pivot, sort the other points by angle and
/// sweep a directed line over them, maintaining the count of points on its
/// West side with two pointers. O(n^2 log n). Must agree with halving_edges()
/// on every input; tests enforce that.
inline Geograph halving_edges_fast(const PointConfig& c) {
    detail::ScaledPoints sp(c.points());
    const int n = c.size();
    std::vector<Edge> edges;

    std::vector<std::size_t> order;
    for (int i = 0; i < n; ++i) {
        order.clear();
        for (int j = 0; j < n; ++j)
            if (j != i) order.push_back(static_cast<std::size_t>(j));
        std::sort(order.begin(), order.end(), detail::AngularOrder{sp, static_cast<std::size_t>(i)});

        const std::size_t m = order.size();
        // e = cyclic index of the first point not strictly West of pivot->order[k]
        std::size_t e = 1;
        for (std::size_t k = 0; k < m; ++k) {
            if (e < k + 1) e = k + 1;
            while (e < k + m &&
                   sp.orient(static_cast<std::size_t>(i), order[k], order[e % m]) > 0)
                ++e;
            long west = static_cast<long>(e - k - 1);
            if (2 * west == n - 2) {
                int j = static_cast<int>(order[k]);
                if (i < j) edges.push_back({i, j});
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return Geograph{c, std::move(edges)};
}

/// Connected components of the edge set, as sorted vertex classes ordered by
/// smallest member. Isolated vertices form singleton classes.
struct ComponentPartition {
    std::vector<std::vector<int>> classes;
};

inline ComponentPartition components(const Geograph& g) {
    const int n = g.size();
    auto adj = g.adjacency();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    ComponentPartition part;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cls;
        std::vector<int> stack{start};
        seen[static_cast<std::size_t>(start)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            cls.push_back(v);
            for (int u : adj[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    stack.push_back(u);
                }
            }
        }
        std::sort(cls.begin(), cls.end());
        part.classes.push_back(std::move(cls));
    }
    return part;
}

}  // namespace geograph
