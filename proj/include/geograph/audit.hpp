#pragma once

#include "geograph/chains.hpp"
#include "geograph/construct.hpp"
#include "geograph/halving.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace geograph {

struct NotAComponentUnion : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class CheckStatus { Pass, Fail, ReportOnly };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "report-only";
    }
}

struct AuditCheck {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct AuditReport {
    std::vector<AuditCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }

    const AuditCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

/// Throws unless `selection` is exactly a union of whole component classes.
inline void require_component_union(const Geograph& g, const ComponentPartition& part,
                                    const std::vector<int>& selection) {
    std::vector<bool> in(static_cast<std::size_t>(g.size()), false);
    for (int v : selection) {
        check_vertex(g.config, v, "component union");
        in[static_cast<std::size_t>(v)] = true;
    }
    for (const auto& cls : part.classes) {
        std::size_t hit = 0;
        for (int v : cls) hit += in[static_cast<std::size_t>(v)] ? 1u : 0u;
        if (hit != 0 && hit != cls.size())
            throw NotAComponentUnion("selection splits the component {" + join_ints(cls) + "}");
    }
}

inline std::vector<Point> collect_points(const Geograph& g, const std::vector<int>& vs) {
    std::vector<Point> out;
    out.reserve(vs.size());
    for (int v : vs) out.push_back(g.config[v]);
    return out;
}

}  // namespace detail

/// Every halving edge of g inside `selection` must have zero balance over
/// the selection's own points.
inline AuditCheck verify_balance_theorem(const Geograph& g, const std::vector<int>& selection) {
    detail::require_component_union(g, components(g), selection);
    std::vector<bool> in(static_cast<std::size_t>(g.size()), false);
    for (int v : selection) in[static_cast<std::size_t>(v)] = true;

    for (const auto& [i, j] : g.edges) {
        if (!in[static_cast<std::size_t>(i)] || !in[static_cast<std::size_t>(j)]) continue;
        DirectedLine line(g.config[i], g.config[j]);
        std::vector<Point> rest;
        for (int v : selection)
            if (v != i && v != j) rest.push_back(g.config[v]);
        long b = side_balance(rest, line);
        if (b != 0)
            return {"balance-theorem", CheckStatus::Fail,
                    "edge (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") has selection balance " + std::to_string(b)};
    }
    return {"balance-theorem", CheckStatus::Pass, ""};
}

/// Halving edges inside `a` must balance `b`'s points to zero, and vice
/// versa. `a` and `b` must be complementary component unions.
inline AuditCheck verify_componentmix(const Geograph& g, const std::vector<int>& a,
                                      const std::vector<int>& b) {
    const auto part = components(g);
    detail::require_component_union(g, part, a);
    detail::require_component_union(g, part, b);
    if (static_cast<int>(a.size() + b.size()) != g.size())
        throw NotAComponentUnion("a and b do not partition the vertex set");
    std::vector<int> seen(static_cast<std::size_t>(g.size()), 0);
    for (int v : a) ++seen[static_cast<std::size_t>(v)];
    for (int v : b) ++seen[static_cast<std::size_t>(v)];
    for (int v = 0; v < g.size(); ++v)
        if (seen[static_cast<std::size_t>(v)] != 1)
            throw NotAComponentUnion("a and b do not partition the vertex set");

    auto check_side = [&](const std::vector<int>& inside,
                          const std::vector<int>& other) -> std::optional<AuditCheck> {
        std::vector<bool> in(static_cast<std::size_t>(g.size()), false);
        for (int v : inside) in[static_cast<std::size_t>(v)] = true;
        std::vector<Point> other_pts = detail::collect_points(g, other);
        for (const auto& [i, j] : g.edges) {
            if (!in[static_cast<std::size_t>(i)] || !in[static_cast<std::size_t>(j)]) continue;
            long bal = side_balance(other_pts, DirectedLine(g.config[i], g.config[j]));
            if (bal != 0)
                return AuditCheck{"componentmix", CheckStatus::Fail,
                                  "edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                      ") balances the complement to " + std::to_string(bal)};
        }
        return std::nullopt;
    };
    if (auto bad = check_side(a, b)) return *bad;
    if (auto bad = check_side(b, a)) return *bad;
    return {"componentmix", CheckStatus::Pass, ""};
}

/// Left-half vertices must have right-degree = left-degree + 1; mirrored on
/// the right.
inline AuditCheck verify_leftright(const OrientedGeograph& og) {
    for (int v = 0; v < og.size(); ++v) {
        int ld = og.left_degree(v), rd = og.right_degree(v);
        bool ok = og.in_left_half(v) ? (rd == ld + 1) : (ld == rd + 1);
        if (!ok)
            return {"leftright", CheckStatus::Fail,
                    "vertex " + std::to_string(v) + " (rank " + std::to_string(og.rank(v)) +
                        ") has left-degree " + std::to_string(ld) + ", right-degree " +
                        std::to_string(rd)};
    }
    return {"leftright", CheckStatus::Pass, ""};
}

/// Removing everything outside a component union must leave exactly the
/// induced halving edges: recompute from scratch on the remaining points and
/// compare with g's edges restricted to the selection.
inline AuditCheck verify_subtraction(const Geograph& g, const std::vector<int>& selection) {
    detail::require_component_union(g, components(g), selection);
    if (selection.empty()) return {"subtraction", CheckStatus::Pass, "empty selection"};
    if (selection.size() % 2 != 0)
        return {"subtraction", CheckStatus::Fail,
                "selection {" + detail::join_ints(selection) + "} has odd size"};

    std::vector<int> sorted = selection;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> new_index(static_cast<std::size_t>(g.size()), -1);
    for (std::size_t k = 0; k < sorted.size(); ++k)
        new_index[static_cast<std::size_t>(sorted[k])] = static_cast<int>(k);

    std::vector<Edge> restricted;
    for (const auto& [i, j] : g.edges) {
        int ni = new_index[static_cast<std::size_t>(i)];
        int nj = new_index[static_cast<std::size_t>(j)];
        if (ni != -1 && nj != -1) restricted.push_back(make_edge(ni, nj));
    }
    std::sort(restricted.begin(), restricted.end());

    Geograph sub = halving_edges(PointConfig::make(detail::collect_points(g, sorted)));
    if (sub.edges != restricted) {
        std::ostringstream os;
        os << "selection {" << detail::join_ints(sorted) << "}: restriction has "
           << restricted.size() << " edges, recomputation has " << sub.edges.size();
        return {"subtraction", CheckStatus::Fail, os.str()};
    }
    return {"subtraction", CheckStatus::Pass, ""};
}

/// Each component's own left half must sit inside the global left half (and
/// mirrored), comparing by the shared projection order.
inline AuditCheck verify_component_halves(const OrientedGeograph& og) {
    const auto part = components(og.geograph());
    for (std::size_t k = 0; k < part.classes.size(); ++k) {
        std::vector<int> cls = part.classes[k];
        std::sort(cls.begin(), cls.end(), [&](int a, int b) { return og.rank(a) < og.rank(b); });
        if (cls.size() % 2 != 0)
            return {"component-halves", CheckStatus::Fail,
                    "component " + std::to_string(k) + " has odd size"};
        for (std::size_t i = 0; i < cls.size(); ++i) {
            bool want_left = i < cls.size() / 2;
            if (og.in_left_half(cls[i]) != want_left)
                return {"component-halves", CheckStatus::Fail,
                        "vertex " + std::to_string(cls[i]) + " is in the " +
                            (want_left ? "right" : "left") + " global half but the " +
                            (want_left ? "left" : "right") + " half of component " +
                            std::to_string(k)};
        }
    }
    return {"component-halves", CheckStatus::Pass, ""};
}

namespace detail {

/// Component-union masks to exercise: exhaustive up to 8 components, then a
/// fixed-seed sample of 256.
inline std::vector<std::uint64_t> union_masks(std::size_t component_count) {
    std::vector<std::uint64_t> masks;
    if (component_count <= 8) {
        for (std::uint64_t m = 0; m < (1ull << component_count); ++m) masks.push_back(m);
        return masks;
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::set<std::uint64_t> seen;
    const std::uint64_t top =
        component_count >= 64 ? ~0ull : ((1ull << component_count) - 1);
    while (seen.size() < 256) seen.insert(rng() % (top + 1));
    masks.assign(seen.begin(), seen.end());
    return masks;
}

inline std::vector<int> union_vertices(const ComponentPartition& part, std::uint64_t mask) {
    std::vector<int> vs;
    for (std::size_t k = 0; k < part.classes.size(); ++k)
        if (mask & (1ull << k)) vs.insert(vs.end(), part.classes[k].begin(), part.classes[k].end());
    std::sort(vs.begin(), vs.end());
    return vs;
}

}  // namespace detail

/// Full structural audit of one configuration. Checks appear in a fixed
/// order and exactly once each; `leaf-count` and `cross-likeness` are
/// reports, never failures.
inline AuditReport audit(const PointConfig& c) {
    AuditReport report;
    const Geograph g = halving_edges(c);
    const ComponentPartition part = components(g);
    const OrientedGeograph og = OrientedGeograph::make(g);
    const int n = c.size();

    {
        const long count = static_cast<long>(g.edges.size());
        bool ok = count >= n / 2;
        report.checks.push_back({"minimum-count",
                                 ok ? CheckStatus::Pass : CheckStatus::Fail,
                                 std::to_string(count) + " edges on " + std::to_string(n) +
                                     " points (needs >= " + std::to_string(n / 2) + ")"});
    }

    {
        AuditCheck check{"odd-degrees", CheckStatus::Pass, ""};
        const auto deg = g.degrees();
        for (int v = 0; v < n; ++v) {
            if (deg[static_cast<std::size_t>(v)] < 1 || deg[static_cast<std::size_t>(v)] % 2 == 0) {
                check = {"odd-degrees", CheckStatus::Fail,
                         "vertex " + std::to_string(v) + " has degree " +
                             std::to_string(deg[static_cast<std::size_t>(v)])};
                break;
            }
        }
        report.checks.push_back(check);
    }

    report.checks.push_back(verify_leftright(og));

    {
        AuditCheck check{"chain-properties", CheckStatus::Pass, ""};
        try {
            auto chains = chain_decomposition(og);
            check.detail = std::to_string(chains.chains.size()) + " chains";
        } catch (const InvariantViolation& e) {
            check = {"chain-properties", CheckStatus::Fail, e.what()};
        }
        report.checks.push_back(check);
    }

    const auto masks = detail::union_masks(part.classes.size());

    {
        AuditCheck balance{"balance-theorem", CheckStatus::Pass,
                           std::to_string(masks.size()) + " unions checked"};
        AuditCheck mix{"componentmix", CheckStatus::Pass,
                       std::to_string(masks.size()) + " unions checked"};
        AuditCheck subtraction{"subtraction", CheckStatus::Pass,
                               std::to_string(masks.size()) + " unions checked"};
        for (std::uint64_t mask : masks) {
            std::vector<int> sel = detail::union_vertices(part, mask);
            if (balance.status == CheckStatus::Pass) {
                AuditCheck r = verify_balance_theorem(g, sel);
                if (r.status == CheckStatus::Fail) balance = r;
            }
            if (mix.status == CheckStatus::Pass) {
                std::vector<int> complement;
                std::vector<bool> in(static_cast<std::size_t>(n), false);
                for (int v : sel) in[static_cast<std::size_t>(v)] = true;
                for (int v = 0; v < n; ++v)
                    if (!in[static_cast<std::size_t>(v)]) complement.push_back(v);
                AuditCheck r = verify_componentmix(g, sel, complement);
                if (r.status == CheckStatus::Fail) mix = r;
            }
            if (subtraction.status == CheckStatus::Pass) {
                AuditCheck r = verify_subtraction(g, sel);
                if (r.status == CheckStatus::Fail) subtraction = r;
            }
        }
        report.checks.push_back(balance);
        report.checks.push_back(mix);
        report.checks.push_back(subtraction);
    }

    report.checks.push_back(verify_component_halves(og));

    {
        const auto deg = g.degrees();
        std::ostringstream os;
        bool flagged = false;
        for (std::size_t k = 0; k < part.classes.size(); ++k) {
            int leaves = 0;
            for (int v : part.classes[k])
                if (deg[static_cast<std::size_t>(v)] == 1) ++leaves;
            os << (k ? "; " : "") << "component " << k << ": " << leaves << " leaves";
            if (part.classes[k].size() > 2 && leaves < 3) flagged = true;
        }
        if (flagged) os << " [component with more than two vertices has fewer than three leaves]";
        report.checks.push_back({"leaf-count", CheckStatus::ReportOnly, os.str()});
    }

    {
        // does every union's edge set cut the complement into one common
        // partition (the way the cross construction does)?
        int unions_tested = 0, cross_like = 0;
        for (std::uint64_t mask : masks) {
            std::vector<int> sel = detail::union_vertices(part, mask);
            if (sel.empty() || static_cast<int>(sel.size()) == n) continue;
            std::vector<int> complement;
            std::vector<bool> in(static_cast<std::size_t>(n), false);
            for (int v : sel) in[static_cast<std::size_t>(v)] = true;
            for (int v = 0; v < n; ++v)
                if (!in[static_cast<std::size_t>(v)]) complement.push_back(v);
            std::vector<Edge> inside;
            for (const auto& [i, j] : g.edges)
                if (in[static_cast<std::size_t>(i)] && in[static_cast<std::size_t>(j)])
                    inside.push_back({i, j});
            if (inside.empty()) continue;
            ++unions_tested;
            if (detail::block_splits_other(c.points(), inside, complement)) ++cross_like;
        }
        std::ostringstream os;
        if (unions_tested == 0)
            os << "no complementary union with edges (single component)";
        else
            os << cross_like << " of " << unions_tested
               << " component unions induce a single partition of their complement";
        report.checks.push_back({"cross-likeness", CheckStatus::ReportOnly, os.str()});
    }

    return report;
}

}  // namespace geograph
