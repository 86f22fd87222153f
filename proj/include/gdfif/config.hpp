#pragma once

#include "gdfif/model.hpp"
#include "gdfif/render.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace gdfif {

struct SolverSettings {
    std::size_t resolution = 64;
    double tol = 1e-9;
    std::size_t max_iters = 200;
};

struct AttractorSettings {
    std::size_t generations = 12;
    std::optional<double> dedup_tolerance;  // unset: half a pixel of the narrowest panel
    std::size_t chaos_points = 0;           // 0 disables the chaos game
    std::size_t burn_in = 100;
    std::uint64_t seed = 1;
    std::size_t point_cap = 50'000'000;
};

struct OutputSettings {
    std::filesystem::path dir = "out";
    std::string prefix;  // defaults to the config file stem
    bool csv = true;
    bool svg = true;
    bool pgm = true;
    bool summary = true;
};

struct ProjectConfig {
    std::vector<DataSet> datasets;
    WiringPlan plan;
    Condition3Mode mode = Condition3Mode::paper_strict;
    SolverSettings solver;
    AttractorSettings attractor;
    PlotSpec plot;
    OutputSettings outputs;
};

/// Parse or schema error; line and column are one-based (0 when unknown).
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, int line = 0, int column = 0);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Reads a YAML config. Relative data-file references resolve against the
/// config file's directory. Throws ConfigError.
ProjectConfig load_config(const std::filesystem::path& path);

/// Parses config text; `base_dir` anchors relative data-file references.
ProjectConfig parse_config(const std::string& text, const std::filesystem::path& base_dir,
                           const std::string& default_prefix = "gdfif");

/// Accepts plain decimals and exact fractions such as "1/3".
double parse_real(const std::string& text);

/// Reads `x,y` rows (optional header line, '#' comments) into a data set.
DataSet read_points_csv(const std::filesystem::path& path);

}  // namespace gdfif
