// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include "test_support.hpp"

#include "geograph/cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace geograph;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// shared corpus; built once
struct Corpus {
    std::vector<PointConfig> random_configs;  // 100 seeded, n in 4..24
    std::vector<PointConfig> convex_configs;  // even n in 4..30
    std::vector<CrossResult> crosses;         // 25 verified pairs
};

bool check_time(Outcome& o, double elapsed_ms, double budget_ms) {
    if (elapsed_ms > budget_ms) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "took %.1f ms, budget %.0f ms", elapsed_ms, budget_ms);
        o.fail(buf);
        return false;
    }
    return true;
}

Outcome criterion1_four_points() {
    Outcome o;
    auto start = Clock::now();
    Geograph sq = halving_edges(ts::square());
    Geograph st = halving_edges(ts::star());
    double elapsed = ms_since(start);
    if (sq.edges != std::vector<Edge>{{0, 2}, {1, 3}}) o.fail("square edges wrong");
    if (st.edges != std::vector<Edge>{{0, 3}, {1, 3}, {2, 3}}) o.fail("star edges wrong");
    for (const auto& [i, j] : st.edges)
        if (j != 3) o.fail("star edge misses the interior point");
    check_time(o, elapsed, 10.0);
    return o;
}

Outcome criterion2_polygon_law(const Corpus& corpus) {
    Outcome o;
    auto start = Clock::now();
    for (const PointConfig& c : corpus.convex_configs) {
        const int n = c.size();
        Geograph g = halving_edges(c);
        if (static_cast<int>(g.edges.size()) != n / 2) o.fail("n=" + std::to_string(n) + ": edge count");
        for (int d : g.degrees())
            if (d != 1) o.fail("n=" + std::to_string(n) + ": not a perfect matching");
        if (static_cast<int>(components(g).classes.size()) != n / 2)
            o.fail("n=" + std::to_string(n) + ": component count");
    }
    check_time(o, ms_since(start), 1000.0);
    return o;
}

Outcome criterion3_minimum_count(const Corpus& corpus) {
    Outcome o;
    auto start = Clock::now();
    for (const PointConfig& c : corpus.random_configs) {
        Geograph g = halving_edges(c);
        if (static_cast<int>(g.edges.size()) < c.size() / 2) o.fail("edge count below n/2");
        for (int d : g.degrees())
            if (d < 1 || d % 2 == 0) o.fail("vertex degree not odd/positive");
    }
    check_time(o, ms_since(start), 30000.0);
    return o;
}

Outcome criterion4_leftright(const Corpus& corpus) {
    Outcome o;
    for (const PointConfig& c : corpus.random_configs) {
        Geograph g = halving_edges(c);
        SlopeSequence seq;
        for (int tried = 0; tried < 3;) {
            Direction d{seq.next()};
            if (!direction_valid(g, d)) continue;
            ++tried;
            AuditCheck check = verify_leftright(OrientedGeograph::make(g, d));
            if (check.status != CheckStatus::Pass) o.fail(check.detail);
        }
    }
    return o;
}

Outcome criterion5_chains(const Corpus& corpus) {
    Outcome o;
    for (const PointConfig& c : corpus.random_configs) {
        Geograph g = halving_edges(c);
        OrientedGeograph og = OrientedGeograph::make(g);
        try {
            ChainDecomposition dec = chain_decomposition(og);  // self-checks the contract
            if (static_cast<int>(dec.chains.size()) != c.size() / 2)
                o.fail("chain count is not n/2");
        } catch (const InvariantViolation& e) {
            o.fail(e.what());
        }
    }
    return o;
}

Outcome criterion7_subtraction(const Corpus& corpus) {
    Outcome o;
    auto run_config = [&](const Geograph& g) {
        const ComponentPartition part = components(g);
        if (part.classes.size() < 2) return;
        for (std::uint64_t mask : detail::union_masks(part.classes.size())) {
            AuditCheck check = verify_subtraction(g, detail::union_vertices(part, mask));
            if (check.status != CheckStatus::Pass) o.fail(check.detail);
        }
        // each extracted component must itself audit clean
        for (const auto& cls : part.classes) {
            std::vector<Point> pts;
            for (int v : cls) pts.push_back(g.config[v]);
            AuditReport sub_report = audit(PointConfig::make(pts));
            if (!sub_report.all_passed()) o.fail("recursive audit failed on a component");
        }
    };
    for (const PointConfig& c : corpus.random_configs) run_config(halving_edges(c));
    for (const PointConfig& c : corpus.convex_configs) run_config(halving_edges(c));
    for (const CrossResult& r : corpus.crosses) run_config(r.geograph);
    return o;
}

Outcome criterion8_component_halves(const Corpus& corpus) {
    Outcome o;
    auto run_config = [&](const Geograph& g) {
        AuditCheck check = verify_component_halves(OrientedGeograph::make(g));
        if (check.status != CheckStatus::Pass) o.fail(check.detail);
    };
    for (const PointConfig& c : corpus.random_configs) run_config(halving_edges(c));
    for (const PointConfig& c : corpus.convex_configs) run_config(halving_edges(c));
    for (const CrossResult& r : corpus.crosses) run_config(r.geograph);
    return o;
}

Outcome criterion9_oracle_equivalence(const Corpus& corpus) {
    Outcome o;
    int tested = 0;
    auto run_config = [&](const PointConfig& c) {
        if (c.size() > 16) return;
        ++tested;
        if (halving_edges_fast(c).edges != halving_edges(c).edges)
            o.fail("fast enumeration diverges on n=" + std::to_string(c.size()));
    };
    for (const PointConfig& c : corpus.random_configs) run_config(c);
    for (const PointConfig& c : corpus.convex_configs) run_config(c);
    for (const CrossResult& r : corpus.crosses) run_config(r.config);
    o.detail = std::to_string(tested) + " configs";
    return o;
}

Outcome criterion10_roundtrip() {
    Outcome o;
    for (std::uint64_t seed = 500; seed < 600; ++seed) {
        GeographDocument doc = ts::random_document(seed);
        std::string text = serialize(doc);
        if (serialize(doc) != text) o.fail("serialization not byte-stable");
        if (!(parse_document(text) == doc)) o.fail("document round-trip changed the data");
    }
    // repeated CLI runs over the same inputs are byte-identical
    std::string dir = "/tmp/geograph-acceptance";
    std::string pts = dir + "/sq.pts";
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(pts);
        out << "0 0\n2 0\n2 2\n0 2\n";
    }
    auto run_once = [&]() {
        std::ostringstream out, err;
        run_cli({"compute", pts, "--format", "doc"}, out, err);
        run_cli({"audit", pts, "--json"}, out, err);
        run_cli({"render", pts, "-o", dir + "/sq.svg"}, out, err);
        std::ifstream svg(dir + "/sq.svg", std::ios::binary);
        std::ostringstream svg_text;
        svg_text << svg.rdbuf();
        return out.str() + svg_text.str();
    };
    std::string first = run_once(), second = run_once();
    if (first != second) o.fail("repeated runs differ");
    if (first.empty()) o.fail("pipeline produced no output");
    return o;
}

Corpus build_corpus(Outcome& cross_outcome, double& cross_ms) {
    Corpus corpus;
    corpus.random_configs = ts::random_corpus(100);
    for (int n = 4; n <= 30; n += 2) corpus.convex_configs.push_back(generate({Shape::Convex, n}));

    // 25 seeded pairs, inputs of size <= 12 with mixed shapes
    std::vector<PointConfig> pool;
    pool.push_back(ts::square());
    pool.push_back(ts::star());
    pool.push_back(ts::single_edge());
    for (int n = 4; n <= 12; n += 2) pool.push_back(generate({Shape::Convex, n}));
    for (int k = 0; k < 8; ++k)
        pool.push_back(ts::random_config(2000 + static_cast<std::uint64_t>(k), 4 + 2 * (k % 5)));

    auto start = Clock::now();
    for (int k = 0; k < 25; ++k) {
        const PointConfig& a = pool[static_cast<std::size_t>(k) % pool.size()];
        const PointConfig& b = pool[static_cast<std::size_t>(k * 7 + 3) % pool.size()];
        try {
            CrossResult r = cross(a, b);
            // the disjoint union shape, rechecked here
            std::vector<Edge> expected = halving_edges(a).edges;
            for (const auto& [i, j] : halving_edges(b).edges)
                expected.push_back({a.size() + i, a.size() + j});
            if (r.geograph.edges != expected) cross_outcome.fail("edges are not the disjoint union");
            if (halving_edges(r.config).edges != r.geograph.edges)
                cross_outcome.fail("stored geograph is not the recomputation");
            std::vector<int> a_block, b_block;
            for (int v = 0; v < a.size(); ++v) a_block.push_back(v);
            for (int v = a.size(); v < a.size() + b.size(); ++v) b_block.push_back(v);
            std::vector<Edge> a_edges = halving_edges(a).edges, b_edges;
            for (const auto& [i, j] : halving_edges(b).edges)
                b_edges.push_back({a.size() + i, a.size() + j});
            if (!detail::block_splits_other(r.config.points(), a_edges, b_block))
                cross_outcome.fail("a-lines do not split b into one common half pair");
            if (!detail::block_splits_other(r.config.points(), b_edges, a_block))
                cross_outcome.fail("b-lines do not split a into one common half pair");
            corpus.crosses.push_back(std::move(r));
        } catch (const std::exception& e) {
            cross_outcome.fail(std::string("cross failed: ") + e.what());
        }
    }
    cross_ms = ms_since(start);
    return corpus;
}

}  // namespace

int main() {
    struct Row {
        int id;
        const char* name;
        Outcome outcome;
        double ms;
    };
    std::vector<Row> rows;

    auto timed = [&](int id, const char* name, const std::function<Outcome()>& fn) {
        auto start = Clock::now();
        Outcome o = fn();
        rows.push_back({id, name, std::move(o), ms_since(start)});
    };

    Outcome cross_outcome;
    double cross_ms = 0;
    Corpus corpus = build_corpus(cross_outcome, cross_ms);
    if (corpus.crosses.size() < 25) cross_outcome.fail("fewer than 25 cross pairs");
    check_time(cross_outcome, cross_ms, 60000.0);

    timed(1, "four-point examples", criterion1_four_points);
    timed(2, "polygon law on convex configs (n = 4..30)", [&] { return criterion2_polygon_law(corpus); });
    timed(3, "minimum count and odd degrees on 100 random configs", [&] { return criterion3_minimum_count(corpus); });
    timed(4, "leftright lemma over the corpus", [&] { return criterion4_leftright(corpus); });
    timed(5, "chain properties over the corpus", [&] { return criterion5_chains(corpus); });
    rows.push_back({6, "verified cross construction on 25 pairs", cross_outcome, cross_ms});
    timed(7, "subtraction theorem and recursive component audits", [&] { return criterion7_subtraction(corpus); });
    timed(8, "component-halves lemma over the corpus", [&] { return criterion8_component_halves(corpus); });
    timed(9, "optimized enumeration equals brute force (n <= 16)", [&] { return criterion9_oracle_equivalence(corpus); });
    timed(10, "round-trip and byte-identical reruns", [&] { return criterion10_roundtrip(); });

    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.id < b.id; });
    bool all = true;
    for (const Row& row : rows) {
        all = all && row.outcome.pass;
        std::printf("[%s] criterion %2d: %s (%.1f ms)%s%s\n", row.outcome.pass ? "PASS" : "FAIL",
                    row.id, row.name, row.ms,
                    row.outcome.detail.empty() ? "" : " -- ", row.outcome.detail.c_str());
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES above");
    return all ? 0 : 1;
}
