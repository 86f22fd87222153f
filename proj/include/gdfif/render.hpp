#pragma once

#include "gdfif/attractor.hpp"
#include "gdfif/funcspace.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace gdfif {

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

/// Layout of a plot: one panel per vertex, side by side.
struct PlotSpec {
    int width = 900;   // whole image, pixels
    int height = 400;
    int margin = 30;   // inside each panel
    std::optional<Range> x_range;  // shared by all panels when set
    std::optional<Range> y_range;
    double point_radius = 0.8;
    std::vector<std::string> colors = {"#1f4e9c", "#b3261e", "#2e7d32", "#6a1b9a"};

    void check() const;  // throws std::invalid_argument
};

/// One CSV row: `vertex` is one-based.
struct CsvRow {
    std::size_t vertex = 1;
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const CsvRow&, const CsvRow&) = default;
};

/// Header `vertex,x,y`, 17 significant digits, rows sorted by (vertex, x).
std::string csv_text(const FunctionFamily& family);
std::string csv_text(const CloudFamily& clouds);
void export_csv(const FunctionFamily& family, const std::filesystem::path& path);
void export_csv(const CloudFamily& clouds, const std::filesystem::path& path);
std::vector<CsvRow> parse_csv(const std::string& text);
std::vector<CsvRow> import_csv(const std::filesystem::path& path);

/// Standalone SVG: polylines for functions, dots for clouds, data points
/// drawn as circles with class "data".
std::string svg_text(const FunctionFamily& family, const std::vector<DataSet>& datasets, const PlotSpec& spec);
std::string svg_text(const CloudFamily& clouds, const std::vector<DataSet>& datasets, const PlotSpec& spec);
void render_svg(const FunctionFamily& family, const std::vector<DataSet>& datasets, const PlotSpec& spec,
                const std::filesystem::path& path);
void render_svg(const CloudFamily& clouds, const std::vector<DataSet>& datasets, const PlotSpec& spec,
                const std::filesystem::path& path);

/// Binary PGM (P5), white background, one black pixel per point.
std::string pgm_bytes(const CloudFamily& clouds, const PlotSpec& spec);
void render_pgm(const CloudFamily& clouds, const PlotSpec& spec, const std::filesystem::path& path);

/// Writes `content` to `path`, creating parent directories. Throws
/// std::runtime_error naming the path on failure.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace gdfif
