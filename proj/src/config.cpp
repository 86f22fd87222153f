#include "gdfif/config.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <fstream>
#include <sstream>

namespace gdfif {

ConfigError::ConfigError(const std::string& what, int line, int column)
    : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
                                  : what),
      line_(line),
      column_(column) {}

double parse_real(const std::string& text) {
    auto parse_plain = [&](std::string_view s) {
        double value = 0.0;
        const auto* first = s.data();
        const auto* last = s.data() + s.size();
        while (first != last && *first == ' ') ++first;
        while (last != first && last[-1] == ' ') --last;
        if (first != last && *first == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) throw std::invalid_argument("not a number: '" + text + "'");
        return value;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return parse_plain(text);
    const double num = parse_plain(std::string_view(text).substr(0, slash));
    const double den = parse_plain(std::string_view(text).substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return num / den;
}

DataSet read_points_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open data file " + path.string());
    std::vector<Point> points;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ConfigError(path.string() + ": expected 'x,y'", lineno, 1);
        try {
            points.push_back({parse_real(line.substr(0, comma)), parse_real(line.substr(comma + 1))});
        } catch (const std::invalid_argument&) {
            if (points.empty() && lineno == 1) continue;  // header
            throw ConfigError(path.string() + ": malformed number", lineno, 1);
        }
    }
    return DataSet(std::move(points));
}

namespace {

[[noreturn]] void fail(const YAML::Node& node, const std::string& what) {
    const auto mark = node.Mark();
    throw ConfigError(what, mark.line + 1, mark.column + 1);
}

YAML::Node require(const YAML::Node& parent, const char* key) {
    const YAML::Node child = parent[key];
    if (!child) fail(parent, std::string("missing key '") + key + "'");
    return child;
}

double real_of(const YAML::Node& node) {
    if (!node.IsScalar()) fail(node, "expected a number");
    try {
        return parse_real(node.Scalar());
    } catch (const std::invalid_argument& e) {
        fail(node, e.what());
    }
}

template <typename T>
T scalar_of(const YAML::Node& node) {
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        fail(node, "unexpected value '" + (node.IsScalar() ? node.Scalar() : std::string("<collection>")) + "'");
    }
}

std::size_t count_of(const YAML::Node& node) {
    const auto v = scalar_of<long long>(node);
    if (v < 0) fail(node, "expected a non-negative integer");
    return static_cast<std::size_t>(v);
}

std::size_t vertex_of(const YAML::Node& node) {
    const auto v = scalar_of<long long>(node);
    if (v < 1) fail(node, "vertex indices start at 1");
    return static_cast<std::size_t>(v - 1);
}

DataSet dataset_of(const YAML::Node& node, const std::filesystem::path& base_dir) {
    if (node["file"]) {
        std::filesystem::path file = scalar_of<std::string>(node["file"]);
        if (file.is_relative()) file = base_dir / file;
        if (!std::filesystem::exists(file)) fail(node["file"], "data file not found: " + file.string());
        return read_points_csv(file);
    }
    const YAML::Node points = require(node, "points");
    if (!points.IsSequence()) fail(points, "'points' must be a list of [x, y] pairs");
    std::vector<Point> out;
    for (const auto& p : points) {
        if (!p.IsSequence() || p.size() != 2) fail(p, "each point must be [x, y]");
        out.push_back({real_of(p[0]), real_of(p[1])});
    }
    return DataSet(std::move(out));
}

std::vector<IntervalAssignment> wiring_row_of(const YAML::Node& node) {
    std::vector<IntervalAssignment> row;
    if (node["intervals"]) {
        for (const auto& entry : node["intervals"]) {
            row.push_back({vertex_of(require(entry, "source")), real_of(require(entry, "d"))});
        }
        return row;
    }
    if (node["blocks"]) {
        for (const auto& block : node["blocks"]) {
            const std::size_t source = vertex_of(require(block, "source"));
            const YAML::Node d = require(block, "d");
            if (d.IsSequence()) {
                if (block["count"] && count_of(block["count"]) != d.size()) fail(block, "block count disagrees with d list");
                for (const auto& v : d) row.push_back({source, real_of(v)});
            } else {
                const std::size_t count = count_of(require(block, "count"));
                const double value = real_of(d);
                for (std::size_t k = 0; k < count; ++k) row.push_back({source, value});
            }
        }
        return row;
    }
    fail(node, "wiring entry needs 'intervals' or 'blocks'");
}

}  // namespace

ProjectConfig parse_config(const std::string& text, const std::filesystem::path& base_dir,
                           const std::string& default_prefix) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw ConfigError("parse error: " + e.msg, e.mark.line + 1, e.mark.column + 1);
    }
    if (!root.IsMap()) throw ConfigError("config must be a mapping", 1, 1);

    ProjectConfig cfg;
    cfg.outputs.prefix = default_prefix;

    const YAML::Node datasets = require(root, "datasets");
    if (!datasets.IsSequence() || datasets.size() == 0) fail(datasets, "'datasets' must be a non-empty list");
    for (const auto& d : datasets) cfg.datasets.push_back(dataset_of(d, base_dir));

    const YAML::Node wiring = require(root, "wiring");
    if (!wiring.IsSequence()) fail(wiring, "'wiring' must be a list with one entry per data set");
    std::vector<std::vector<IntervalAssignment>> rows;
    for (const auto& w : wiring) rows.push_back(wiring_row_of(w));
    cfg.plan = WiringPlan(std::move(rows));

    if (const auto mode = root["condition3_mode"]) {
        try {
            cfg.mode = condition3_mode_from_string(scalar_of<std::string>(mode));
        } catch (const std::invalid_argument& e) {
            fail(mode, e.what());
        }
    }

    if (const auto s = root["solver"]) {
        if (s["resolution"]) cfg.solver.resolution = count_of(s["resolution"]);
        if (s["tol"]) cfg.solver.tol = real_of(s["tol"]);
        if (s["max_iters"]) cfg.solver.max_iters = count_of(s["max_iters"]);
    }
    if (const auto a = root["attractor"]) {
        if (a["generations"]) cfg.attractor.generations = count_of(a["generations"]);
        if (a["dedup_tolerance"]) cfg.attractor.dedup_tolerance = real_of(a["dedup_tolerance"]);
        if (a["chaos_points"]) cfg.attractor.chaos_points = count_of(a["chaos_points"]);
        if (a["burn_in"]) cfg.attractor.burn_in = count_of(a["burn_in"]);
        if (a["seed"]) cfg.attractor.seed = scalar_of<std::uint64_t>(a["seed"]);
        if (a["point_cap"]) cfg.attractor.point_cap = count_of(a["point_cap"]);
    }
    if (const auto p = root["plot"]) {
        if (p["width"]) cfg.plot.width = scalar_of<int>(p["width"]);
        if (p["height"]) cfg.plot.height = scalar_of<int>(p["height"]);
        if (p["margin"]) cfg.plot.margin = scalar_of<int>(p["margin"]);
        if (p["point_radius"]) cfg.plot.point_radius = real_of(p["point_radius"]);
        auto range = [](const YAML::Node& n) {
            if (!n.IsSequence() || n.size() != 2) fail(n, "a range is [lo, hi]");
            return Range{real_of(n[0]), real_of(n[1])};
        };
        if (p["x_range"]) cfg.plot.x_range = range(p["x_range"]);
        if (p["y_range"]) cfg.plot.y_range = range(p["y_range"]);
        if (p["colors"]) cfg.plot.colors = scalar_of<std::vector<std::string>>(p["colors"]);
        try {
            cfg.plot.check();
        } catch (const std::invalid_argument& e) {
            fail(p, e.what());
        }
    }
    if (const auto o = root["outputs"]) {
        if (o["dir"]) cfg.outputs.dir = scalar_of<std::string>(o["dir"]);
        if (o["prefix"]) cfg.outputs.prefix = scalar_of<std::string>(o["prefix"]);
        if (o["csv"]) cfg.outputs.csv = scalar_of<bool>(o["csv"]);
        if (o["svg"]) cfg.outputs.svg = scalar_of<bool>(o["svg"]);
        if (o["pgm"]) cfg.outputs.pgm = scalar_of<bool>(o["pgm"]);
        if (o["summary"]) cfg.outputs.summary = scalar_of<bool>(o["summary"]);
    }
    return cfg;
}

ProjectConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.parent_path(), path.stem().string());
}

}  // namespace gdfif
