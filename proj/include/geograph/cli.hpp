#pragma once

#include "geograph/audit.hpp"
#include "geograph/chains.hpp"
#include "geograph/construct.hpp"
#include "geograph/generate.hpp"
#include "geograph/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace geograph {

// exit codes: 0 success / all checks pass, 1 audit found a failing check,
// 2 input or usage error
namespace cli_detail {

constexpr int kOk = 0;
constexpr int kAuditFail = 1;
constexpr int kUsage = 2;

inline PointConfig load_config(const std::string& path) {
    return PointConfig::make(load_points(path));
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path + ": cannot open for writing");
    out << content;
    if (!out) throw ParseError(path + ": write failed");
}

inline std::string sibling_json_path(const std::string& path) {
    std::size_t slash = path.find_last_of('/');
    std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + ".json";
    return path.substr(0, dot) + ".json";
}

inline GeographDocument full_document(const Geograph& g) {
    GeographDocument doc;
    doc.points = g.config.points();
    doc.edges = g.edges;
    doc.components = components(g).classes;
    OrientedGeograph og = OrientedGeograph::make(g);
    doc.direction = og.direction().t;
    std::vector<std::vector<int>> chain_lists;
    for (const Chain& ch : chain_decomposition(og).chains) chain_lists.push_back(ch.vertices);
    doc.chains = std::move(chain_lists);
    return doc;
}

inline int run_compute(const std::string& file, const std::string& format, std::ostream& out) {
    Geograph g = halving_edges(load_config(file));
    if (format == "edges") {
        for (const auto& [i, j] : g.edges) out << i << " " << j << "\n";
    } else if (format == "dot") {
        out << to_dot(g);
    } else {
        out << serialize(full_document(g));
    }
    return kOk;
}

inline int run_components(const std::string& file, std::ostream& out) {
    Geograph g = halving_edges(load_config(file));
    for (const auto& cls : components(g).classes) {
        for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? " " : "") << cls[i];
        out << "\n";
    }
    return kOk;
}

inline int run_chains(const std::string& file, std::ostream& out) {
    Geograph g = halving_edges(load_config(file));
    OrientedGeograph og = OrientedGeograph::make(g);
    out << "direction: (1, " << og.direction().t.str() << ")\n";
    auto print_half = [&](const char* label, const std::vector<int>& vs) {
        out << label;
        for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
        out << "\n";
    };
    print_half("left half: ", og.left_half());
    print_half("right half: ", og.right_half());
    for (int v = 0; v < og.size(); ++v)
        out << "vertex " << v << ": left " << og.left_degree(v) << ", right "
            << og.right_degree(v) << "\n";
    for (const Chain& ch : chain_decomposition(og).chains) {
        out << "chain:";
        for (int v : ch.vertices) out << " " << v;
        out << "\n";
    }
    return kOk;
}

inline int run_cross(const std::string& file_a, const std::string& file_b,
                     const std::string& out_path, std::ostream& out) {
    CrossResult r = cross(load_config(file_a), load_config(file_b));
    write_file(out_path, points_to_string(r.config.points()));
    write_file(sibling_json_path(out_path), serialize(full_document(r.geograph)));
    out << "attempts: " << r.attempts << "\n";
    return kOk;
}

inline int run_gen(const GeneratorSpec& spec, const std::string& out_path) {
    write_file(out_path, points_to_string(generate(spec).points()));
    return kOk;
}

inline int run_audit(const std::string& file, bool as_json, std::ostream& out) {
    Geograph g = halving_edges(load_config(file));
    AuditReport report = audit(g.config);
    const auto part = components(g);
    if (as_json) {
        nlohmann::ordered_json j;
        j["points"] = g.size();
        j["edges"] = g.edges.size();
        j["components"] = part.classes.size();
        auto& checks = j["checks"] = nlohmann::ordered_json::array();
        for (const AuditCheck& c : report.checks)
            checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
        j["passed"] = report.all_passed();
        out << j.dump(2) << "\n";
    } else {
        for (const AuditCheck& c : report.checks) {
            const char* tag = c.status == CheckStatus::Pass ? "pass"
                              : c.status == CheckStatus::Fail ? "FAIL"
                                                              : "info";
            out << "[" << tag << "] " << c.name;
            if (!c.detail.empty()) out << ": " << c.detail;
            out << "\n";
        }
        out << "audit: " << (report.all_passed() ? "PASS" : "FAIL") << " (" << g.size()
            << " points, " << g.edges.size() << " halving edges, " << part.classes.size()
            << " components)\n";
    }
    return report.all_passed() ? kOk : kAuditFail;
}

inline int run_render(const std::string& file, const std::string& out_path) {
    Geograph g = halving_edges(load_config(file));
    write_file(out_path, to_svg(g, components(g)));
    return kOk;
}

}  // namespace cli_detail

/// Command-line entry point, separated from main() so tests can drive it
/// in-process. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"halving lines and underlying geographs, in exact arithmetic"};
    app.require_subcommand(1);

    std::string file, file_b, out_path;
    std::string format = "edges";
    bool as_json = false;
    std::string shape = "random";
    GeneratorSpec spec;

    auto* compute = app.add_subcommand("compute", "print halving edges of a point file");
    compute->add_option("points-file", file, "input point file")->required();
    compute->add_option("--format", format, "edges|doc|dot")
        ->check(CLI::IsMember({"edges", "doc", "dot"}));

    auto* comp = app.add_subcommand("components", "print the component partition");
    comp->add_option("points-file", file, "input point file")->required();

    auto* chains = app.add_subcommand("chains", "print direction, halves, degrees and chains");
    chains->add_option("points-file", file, "input point file")->required();

    auto* cross_cmd = app.add_subcommand("cross", "superimpose two configurations as a cross");
    cross_cmd->add_option("a", file, "first point file")->required();
    cross_cmd->add_option("b", file_b, "second point file")->required();
    cross_cmd->add_option("-o,--output", out_path, "output point file (a .json document is written beside it)")
        ->required();

    auto* gen = app.add_subcommand("gen", "generate a configuration");
    gen->add_option("--shape", shape, "convex|star|random")
        ->required()
        ->check(CLI::IsMember({"convex", "star", "random"}));
    gen->add_option("--n", spec.n, "number of points (even)")->required();
    gen->add_option("--seed", spec.seed, "random seed");
    gen->add_option("--bound", spec.bound, "coordinate bound for random");
    gen->add_option("-o,--output", out_path, "output point file")->required();

    auto* audit_cmd = app.add_subcommand("audit", "run the structural audit");
    audit_cmd->add_option("points-file", file, "input point file")->required();
    audit_cmd->add_flag("--json", as_json, "emit a JSON report");

    auto* render = app.add_subcommand("render", "render points and halving edges as SVG");
    render->add_option("points-file", file, "input point file")->required();
    render->add_option("-o,--output", out_path, "output SVG file")->required();

    std::vector<const char*> argv;
    argv.push_back("geograph");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err) == 0 ? cli_detail::kOk : cli_detail::kUsage;
        err << "error: " << e.what() << "\n";
        return cli_detail::kUsage;
    }

    try {
        if (compute->parsed()) return cli_detail::run_compute(file, format, out);
        if (comp->parsed()) return cli_detail::run_components(file, out);
        if (chains->parsed()) return cli_detail::run_chains(file, out);
        if (cross_cmd->parsed()) return cli_detail::run_cross(file, file_b, out_path, out);
        if (gen->parsed()) {
            spec.shape = shape == "convex" ? Shape::Convex
                         : shape == "star" ? Shape::Star
                                           : Shape::Random;
            return cli_detail::run_gen(spec, out_path);
        }
        if (audit_cmd->parsed()) return cli_detail::run_audit(file, as_json, out);
        if (render->parsed()) return cli_detail::run_render(file, out_path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return cli_detail::kUsage;
    }
    err << "error: no subcommand\n";
    return cli_detail::kUsage;
}

}  // namespace geograph
