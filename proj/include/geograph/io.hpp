#pragma once

#include "geograph/halving.hpp"
#include "geograph/orientation.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace geograph {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// point files: one point per line as two whitespace-separated rationals
// ("a/b" or "a"); '#' lines and blank lines ignored
// ---------------------------------------------------------------------------

inline std::vector<Point> parse_points(std::istream& in, const std::string& name) {
    std::vector<Point> points;
    std::vector<int> lines;  // source line of each point, for diagnostics
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string xs, ys, extra;
        if (!(fields >> xs >> ys) || (fields >> extra))
            throw ParseError(name + ":" + std::to_string(lineno) +
                             ": expected exactly two rationals");
        try {
            Rational x = Rational::from_string(xs);
            Rational y = Rational::from_string(ys);
            points.push_back({std::move(x), std::move(y)});
        } catch (const std::invalid_argument& e) {
            throw ParseError(name + ":" + std::to_string(lineno) + ": " + e.what());
        }
        lines.push_back(lineno);
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw ParseError(name + ":" + std::to_string(lines[j]) +
                                 ": duplicate of the point on line " + std::to_string(lines[i]));
    return points;
}

inline std::vector<Point> load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return parse_points(in, path);
}

inline std::string points_to_string(const std::vector<Point>& points) {
    std::ostringstream os;
    for (const Point& p : points) os << p.x.str() << " " << p.y.str() << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// geograph documents: JSON with fixed key order and exact rationals as
// strings, so output is byte-stable and round-trips losslessly
// ---------------------------------------------------------------------------

struct GeographDocument {
    std::vector<Point> points;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> components;
    std::optional<Rational> direction;  // slope t of the direction (1, t)
    std::optional<std::vector<std::vector<int>>> chains;

    friend bool operator==(const GeographDocument& a, const GeographDocument& b) {
        return a.points == b.points && a.edges == b.edges && a.components == b.components &&
               a.direction == b.direction && a.chains == b.chains;
    }
};

inline std::string serialize(const GeographDocument& doc) {
    nlohmann::ordered_json j;
    auto& points = j["points"] = nlohmann::ordered_json::array();
    for (const Point& p : doc.points) points.push_back({p.x.str(), p.y.str()});
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : doc.edges) edges.push_back({a, b});
    j["components"] = doc.components;
    if (doc.direction) j["direction"] = {"1", doc.direction->str()};
    if (doc.chains) j["chains"] = *doc.chains;
    return j.dump(2) + "\n";
}

inline GeographDocument parse_document(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("document: ") + e.what());
    }
    GeographDocument doc;
    try {
        for (const auto& p : j.at("points")) {
            Rational x = Rational::from_string(p.at(0).get<std::string>());
            Rational y = Rational::from_string(p.at(1).get<std::string>());
            doc.points.push_back({std::move(x), std::move(y)});
        }
        for (const auto& e : j.at("edges"))
            doc.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        doc.components = j.at("components").get<std::vector<std::vector<int>>>();
        if (j.contains("direction")) {
            if (j["direction"].at(0).get<std::string>() != "1")
                throw ParseError("document: direction must be of the form [\"1\", t]");
            doc.direction = Rational::from_string(j["direction"].at(1).get<std::string>());
        }
        if (j.contains("chains"))
            doc.chains = j["chains"].get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("document: ") + e.what());
    }
    return doc;
}

// ---------------------------------------------------------------------------
// renderings
// ---------------------------------------------------------------------------

inline std::string to_dot(const Geograph& g) {
    std::ostringstream os;
    os << "graph halving {\n";
    for (int v = 0; v < g.size(); ++v)
        os << "  " << v << " [pos=\"" << g.config[v].x.str() << "," << g.config[v].y.str()
           << "\"];\n";
    for (const auto& [i, j] : g.edges) os << "  " << i << " -- " << j << ";\n";
    os << "}\n";
    return os.str();
}

namespace detail {

inline std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace detail

/// Deterministic SVG: points as circles and halving edges as segments on a
/// 1000x1000 viewBox, components cycling through a fixed palette. The only
/// inexact step anywhere in the library is the final double conversion here,
/// and nothing reads it back.
inline std::string to_svg(const Geograph& g, const ComponentPartition& part) {
    static const char* kPalette[] = {"#4477aa", "#ee6677", "#228833", "#ccbb44",
                                     "#66ccee", "#aa3377", "#bbbbbb", "#222222"};
    constexpr int kPaletteSize = 8;
    constexpr double kView = 1000.0;
    constexpr double kMargin = 60.0;
    constexpr double kStroke = 3.0;
    constexpr double kRadius = 7.0;

    Rational xlo = g.config[0].x, xhi = xlo, ylo = g.config[0].y, yhi = ylo;
    for (const Point& p : g.config.points()) {
        if (p.x < xlo) xlo = p.x;
        if (xhi < p.x) xhi = p.x;
        if (p.y < ylo) ylo = p.y;
        if (yhi < p.y) yhi = p.y;
    }
    const double w = (xhi - xlo).to_double(), h = (yhi - ylo).to_double();
    const double extent = std::max(w, h);
    const double scale = extent > 0 ? (kView - 2 * kMargin) / extent : 1.0;
    const double cx = (xhi + xlo).to_double() / 2, cy = (yhi + ylo).to_double() / 2;
    auto sx = [&](const Point& p) { return kView / 2 + (p.x.to_double() - cx) * scale; };
    auto sy = [&](const Point& p) { return kView / 2 - (p.y.to_double() - cy) * scale; };

    std::vector<int> cls(static_cast<std::size_t>(g.size()), 0);
    for (int k = 0; k < static_cast<int>(part.classes.size()); ++k)
        for (int v : part.classes[static_cast<std::size_t>(k)])
            cls[static_cast<std::size_t>(v)] = k;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
    os << "  <rect width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n";
    for (const auto& [i, j] : g.edges) {
        const char* color = kPalette[cls[static_cast<std::size_t>(i)] % kPaletteSize];
        os << "  <line x1=\"" << detail::fixed3(sx(g.config[i])) << "\" y1=\""
           << detail::fixed3(sy(g.config[i])) << "\" x2=\"" << detail::fixed3(sx(g.config[j]))
           << "\" y2=\"" << detail::fixed3(sy(g.config[j])) << "\" stroke=\"" << color
           << "\" stroke-width=\"" << detail::fixed3(kStroke) << "\"/>\n";
    }
    for (int v = 0; v < g.size(); ++v) {
        const char* color = kPalette[cls[static_cast<std::size_t>(v)] % kPaletteSize];
        os << "  <circle cx=\"" << detail::fixed3(sx(g.config[v])) << "\" cy=\""
           << detail::fixed3(sy(g.config[v])) << "\" r=\"" << detail::fixed3(kRadius)
           << "\" fill=\"" << color << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace geograph
