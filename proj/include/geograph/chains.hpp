#pragma once

#include "geograph/orientation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace geograph {

struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// A subpath of the geograph that travels strictly left-to-right in
/// projection order.
struct Chain {
    std::vector<int> vertices;
};

struct ChainDecomposition {
    std::vector<Chain> chains;
};

namespace detail {

struct VertexEdges {
    std::vector<int> west;  // edge ids whose other endpoint projects earlier
    std::vector<int> east;  // ... later
};

}  // namespace detail

/// Decomposes the halving edges into chains. At each vertex the west-side
/// and east-side incident edges are sorted by slope in the direction frame
/// and paired by rank; the one unpaired edge starts or ends a chain there.
/// The result is checked against the chain contract:
///   - every edge lies in exactly one chain,
///   - every vertex is the endpoint of exactly one chain,
///   - left-half vertices are left endpoints, right-half vertices right ones.
/// A geograph that is not an underlying geograph fails the contract, which
/// surfaces as InvariantViolation.
inline ChainDecomposition chain_decomposition(const OrientedGeograph& og) {
    const Geograph& g = og.geograph();
    const auto& pts = g.config.points();
    const int n = g.size();
    const int edge_count = static_cast<int>(g.edges.size());
    const Rational& t = og.direction().t;

    // slope of edge e seen from vertex v, in the (d, north) frame
    auto slope = [&](int e, int v) {
        const auto& [i, j] = g.edges[static_cast<std::size_t>(e)];
        int u = (i == v) ? j : i;
        const Point& pv = pts[static_cast<std::size_t>(v)];
        const Point& pu = pts[static_cast<std::size_t>(u)];
        Rational run = (pu.x - pv.x) + t * (pu.y - pv.y);
        Rational rise = (pu.y - pv.y) - t * (pu.x - pv.x);
        return rise / run;
    };

    std::vector<detail::VertexEdges> incident(static_cast<std::size_t>(n));
    for (int e = 0; e < edge_count; ++e) {
        const auto& [i, j] = g.edges[static_cast<std::size_t>(e)];
        if (og.rank(i) < og.rank(j)) {
            incident[static_cast<std::size_t>(i)].east.push_back(e);
            incident[static_cast<std::size_t>(j)].west.push_back(e);
        } else {
            incident[static_cast<std::size_t>(j)].east.push_back(e);
            incident[static_cast<std::size_t>(i)].west.push_back(e);
        }
    }

    // successor[e]: edge continuing a chain east of e's right endpoint
    std::vector<int> successor(static_cast<std::size_t>(edge_count), -1);
    std::vector<int> predecessor(static_cast<std::size_t>(edge_count), -1);
    for (int v = 0; v < n; ++v) {
        auto& at = incident[static_cast<std::size_t>(v)];
        auto by_slope = [&](int e1, int e2) { return slope(e1, v) < slope(e2, v); };
        std::sort(at.west.begin(), at.west.end(), by_slope);
        std::sort(at.east.begin(), at.east.end(), by_slope);
        const std::size_t paired = std::min(at.west.size(), at.east.size());
        for (std::size_t k = 0; k < paired; ++k) {
            successor[static_cast<std::size_t>(at.west[k])] = at.east[k];
            predecessor[static_cast<std::size_t>(at.east[k])] = at.west[k];
        }
    }

    auto left_endpoint = [&](int e) {
        const auto& [i, j] = g.edges[static_cast<std::size_t>(e)];
        return og.rank(i) < og.rank(j) ? i : j;
    };
    auto right_endpoint = [&](int e) {
        const auto& [i, j] = g.edges[static_cast<std::size_t>(e)];
        return og.rank(i) < og.rank(j) ? j : i;
    };

    ChainDecomposition result;
    std::vector<bool> used(static_cast<std::size_t>(edge_count), false);
    for (int e = 0; e < edge_count; ++e) {
        if (predecessor[static_cast<std::size_t>(e)] != -1) continue;
        Chain chain;
        chain.vertices.push_back(left_endpoint(e));
        for (int cur = e; cur != -1; cur = successor[static_cast<std::size_t>(cur)]) {
            if (used[static_cast<std::size_t>(cur)])
                throw InvariantViolation("chain_decomposition: edge visited twice");
            used[static_cast<std::size_t>(cur)] = true;
            chain.vertices.push_back(right_endpoint(cur));
        }
        result.chains.push_back(std::move(chain));
    }

    for (int e = 0; e < edge_count; ++e)
        if (!used[static_cast<std::size_t>(e)])
            throw InvariantViolation("chain_decomposition: edge " + std::to_string(e) +
                                     " not covered by any chain");

    // ranks strictly increase along every chain
    for (const Chain& chain : result.chains)
        for (std::size_t k = 0; k + 1 < chain.vertices.size(); ++k)
            if (og.rank(chain.vertices[k]) >= og.rank(chain.vertices[k + 1]))
                throw InvariantViolation("chain_decomposition: chain not left-to-right");

    std::vector<int> endpoint_count(static_cast<std::size_t>(n), 0);
    for (const Chain& chain : result.chains) {
        ++endpoint_count[static_cast<std::size_t>(chain.vertices.front())];
        ++endpoint_count[static_cast<std::size_t>(chain.vertices.back())];
    }
    for (int v = 0; v < n; ++v)
        if (endpoint_count[static_cast<std::size_t>(v)] != 1)
            throw InvariantViolation("chain_decomposition: vertex " + std::to_string(v) +
                                     " is the endpoint of " +
                                     std::to_string(endpoint_count[static_cast<std::size_t>(v)]) +
                                     " chains");

    for (const Chain& chain : result.chains) {
        if (!og.in_left_half(chain.vertices.front()))
            throw InvariantViolation("chain_decomposition: chain starts in the right half");
        if (og.in_left_half(chain.vertices.back()))
            throw InvariantViolation("chain_decomposition: chain ends in the left half");
    }

    std::sort(result.chains.begin(), result.chains.end(), [&](const Chain& c1, const Chain& c2) {
        return og.rank(c1.vertices.front()) < og.rank(c2.vertices.front());
    });
    return result;
}

}  // namespace geograph
