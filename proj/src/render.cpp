#include "gdfif/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gdfif {

void PlotSpec::check() const {
    if (width <= 0 || height <= 0) throw std::invalid_argument("plot dimensions must be positive");
    if (margin < 0) throw std::invalid_argument("plot margin must be non-negative");
    if (x_range && !(x_range->lo < x_range->hi)) throw std::invalid_argument("explicit x range is empty");
    if (y_range && !(y_range->lo < y_range->hi)) throw std::invalid_argument("explicit y range is empty");
    if (colors.empty()) throw std::invalid_argument("at least one colour is required");
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw std::runtime_error("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

namespace {

std::string num(double v, const char* format = "%.17g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::string csv_from_rows(std::vector<CsvRow> rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const CsvRow& a, const CsvRow& b) {
        if (a.vertex != b.vertex) return a.vertex < b.vertex;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    std::string out = "vertex,x,y\n";
    for (const auto& r : rows) out += std::to_string(r.vertex) + "," + num(r.x) + "," + num(r.y) + "\n";
    return out;
}

}  // namespace

std::string csv_text(const FunctionFamily& family) {
    std::vector<CsvRow> rows;
    for (const auto& fn : family) {
        for (std::size_t k = 0; k < fn.size(); ++k) rows.push_back({fn.vertex() + 1, fn.grid()[k], fn.values()[k]});
    }
    return csv_from_rows(std::move(rows));
}

std::string csv_text(const CloudFamily& clouds) {
    std::vector<CsvRow> rows;
    for (const auto& cloud : clouds) {
        for (const Point& p : cloud.points) rows.push_back({cloud.vertex + 1, p.x, p.y});
    }
    return csv_from_rows(std::move(rows));
}

void export_csv(const FunctionFamily& family, const std::filesystem::path& path) { write_file(path, csv_text(family)); }
void export_csv(const CloudFamily& clouds, const std::filesystem::path& path) { write_file(path, csv_text(clouds)); }

std::vector<CsvRow> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<CsvRow> rows;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1 && line.rfind("vertex", 0) == 0) continue;
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string::npos) throw std::runtime_error("csv line " + std::to_string(lineno) + ": expected 3 fields");
        try {
            CsvRow row;
            row.vertex = std::stoul(line.substr(0, c1));
            row.x = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
            row.y = std::stod(line.substr(c2 + 1));
            rows.push_back(row);
        } catch (const std::logic_error&) {
            throw std::runtime_error("csv line " + std::to_string(lineno) + ": malformed number");
        }
    }
    return rows;
}

std::vector<CsvRow> import_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str());
}

namespace {

// Screen mapping for one panel. Math coordinates stay untouched; only the
// projection flips y.
struct Panel {
    double left, right, top, bottom;
    Range xr, yr;

    double sx(double x) const { return left + (x - xr.lo) / (xr.hi - xr.lo) * (right - left); }
    double sy(double y) const { return bottom - (y - yr.lo) / (yr.hi - yr.lo) * (bottom - top); }
    bool contains(Point p) const { return p.x >= xr.lo && p.x <= xr.hi && p.y >= yr.lo && p.y <= yr.hi; }
};

Range padded(double lo, double hi) {
    if (!(lo < hi)) {
        const double pad = std::max(1.0, std::abs(lo) * 0.1);
        return {lo - pad, hi + pad};
    }
    const double pad = 0.04 * (hi - lo);
    return {lo - pad, hi + pad};
}

std::vector<Panel> layout(const std::vector<std::vector<Point>>& content, const PlotSpec& spec) {
    spec.check();
    const std::size_t n = std::max<std::size_t>(content.size(), 1);
    const double panel_w = static_cast<double>(spec.width) / static_cast<double>(n);
    std::vector<Panel> panels;
    for (std::size_t k = 0; k < content.size(); ++k) {
        double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
        if (!content[k].empty()) {
            x0 = x1 = content[k][0].x;
            y0 = y1 = content[k][0].y;
            for (const Point& p : content[k]) {
                x0 = std::min(x0, p.x);
                x1 = std::max(x1, p.x);
                y0 = std::min(y0, p.y);
                y1 = std::max(y1, p.y);
            }
        }
        Panel panel;
        panel.left = static_cast<double>(k) * panel_w + spec.margin;
        panel.right = static_cast<double>(k + 1) * panel_w - spec.margin;
        panel.top = spec.margin;
        panel.bottom = spec.height - spec.margin;
        if (panel.right <= panel.left || panel.bottom <= panel.top) {
            throw std::invalid_argument("margins leave no room for the plot");
        }
        panel.xr = spec.x_range ? *spec.x_range : padded(x0, x1);
        panel.yr = spec.y_range ? *spec.y_range : padded(y0, y1);
        panels.push_back(panel);
    }
    return panels;
}

std::vector<std::vector<Point>> content_of(const FunctionFamily& family, const std::vector<DataSet>& datasets) {
    std::vector<std::vector<Point>> content(family.size());
    for (std::size_t k = 0; k < family.size(); ++k) {
        for (std::size_t s = 0; s < family[k].size(); ++s) content[k].push_back({family[k].grid()[s], family[k].values()[s]});
        if (k < datasets.size()) {
            for (const Point& p : datasets[k].points()) content[k].push_back(p);
        }
    }
    return content;
}

std::vector<std::vector<Point>> content_of(const CloudFamily& clouds, const std::vector<DataSet>& datasets) {
    std::vector<std::vector<Point>> content(clouds.size());
    for (std::size_t k = 0; k < clouds.size(); ++k) {
        content[k] = clouds[k].points;
        if (k < datasets.size()) {
            for (const Point& p : datasets[k].points()) content[k].push_back(p);
        }
    }
    return content;
}

void svg_open(std::ostringstream& out, const PlotSpec& spec, const std::vector<Panel>& panels) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width << "\" height=\""
        << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\"" << spec.height
        << "\" fill=\"white\"/>\n<defs>\n";
    for (std::size_t k = 0; k < panels.size(); ++k) {
        const auto& p = panels[k];
        out << "<clipPath id=\"clip" << k + 1 << "\"><rect x=\"" << num(p.left, "%.2f") << "\" y=\""
            << num(p.top, "%.2f") << "\" width=\"" << num(p.right - p.left, "%.2f") << "\" height=\""
            << num(p.bottom - p.top, "%.2f") << "\"/></clipPath>\n";
    }
    out << "</defs>\n";
}

void svg_frame(std::ostringstream& out, const Panel& p, std::size_t vertex) {
    out << "<g class=\"frame\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#444\">\n"
        << "<rect x=\"" << num(p.left, "%.2f") << "\" y=\"" << num(p.top, "%.2f") << "\" width=\""
        << num(p.right - p.left, "%.2f") << "\" height=\"" << num(p.bottom - p.top, "%.2f")
        << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"0.5\"/>\n"
        << "<text x=\"" << num(p.left, "%.2f") << "\" y=\"" << num(p.bottom + 12, "%.2f") << "\">"
        << num(p.xr.lo, "%.4g") << "</text>\n"
        << "<text x=\"" << num(p.right, "%.2f") << "\" y=\"" << num(p.bottom + 12, "%.2f")
        << "\" text-anchor=\"end\">" << num(p.xr.hi, "%.4g") << "</text>\n"
        << "<text x=\"" << num(p.left - 3, "%.2f") << "\" y=\"" << num(p.bottom, "%.2f")
        << "\" text-anchor=\"end\">" << num(p.yr.lo, "%.4g") << "</text>\n"
        << "<text x=\"" << num(p.left - 3, "%.2f") << "\" y=\"" << num(p.top + 8, "%.2f")
        << "\" text-anchor=\"end\">" << num(p.yr.hi, "%.4g") << "</text>\n"
        << "<text x=\"" << num(0.5 * (p.left + p.right), "%.2f") << "\" y=\"" << num(p.top - 8, "%.2f")
        << "\" text-anchor=\"middle\">A" << vertex + 1 << "</text>\n</g>\n";
}

void svg_data_points(std::ostringstream& out, const Panel& p, const DataSet& data) {
    for (const Point& q : data.points()) {
        if (!p.contains(q)) continue;
        out << "<circle class=\"data\" cx=\"" << num(p.sx(q.x), "%.2f") << "\" cy=\"" << num(p.sy(q.y), "%.2f")
            << "\" r=\"3\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
}

const std::string& colour(const PlotSpec& spec, std::size_t k) { return spec.colors[k % spec.colors.size()]; }

}  // namespace

std::string svg_text(const FunctionFamily& family, const std::vector<DataSet>& datasets, const PlotSpec& spec) {
    const auto panels = layout(content_of(family, datasets), spec);
    std::ostringstream out;
    svg_open(out, spec, panels);
    for (std::size_t k = 0; k < family.size(); ++k) {
        const Panel& p = panels[k];
        svg_frame(out, p, k);
        out << "<polyline class=\"function\" clip-path=\"url(#clip" << k + 1 << ")\" fill=\"none\" stroke=\""
            << colour(spec, k) << "\" stroke-width=\"0.8\" points=\"";
        const auto& fn = family[k];
        for (std::size_t s = 0; s < fn.size(); ++s) {
            if (s > 0) out << ' ';
            out << num(p.sx(fn.grid()[s]), "%.2f") << ',' << num(p.sy(fn.values()[s]), "%.2f");
        }
        out << "\"/>\n";
        if (k < datasets.size()) svg_data_points(out, p, datasets[k]);
    }
    out << "</svg>\n";
    return out.str();
}

std::string svg_text(const CloudFamily& clouds, const std::vector<DataSet>& datasets, const PlotSpec& spec) {
    const auto panels = layout(content_of(clouds, datasets), spec);
    std::ostringstream out;
    svg_open(out, spec, panels);
    const std::string radius = num(spec.point_radius, "%.2f");
    for (std::size_t k = 0; k < clouds.size(); ++k) {
        const Panel& p = panels[k];
        svg_frame(out, p, k);
        out << "<g class=\"cloud\" fill=\"" << colour(spec, k) << "\">\n";
        for (const Point& q : clouds[k].points) {
            if (!p.contains(q)) continue;
            out << "<circle cx=\"" << num(p.sx(q.x), "%.2f") << "\" cy=\"" << num(p.sy(q.y), "%.2f") << "\" r=\""
                << radius << "\"/>\n";
        }
        out << "</g>\n";
        if (k < datasets.size()) svg_data_points(out, p, datasets[k]);
    }
    out << "</svg>\n";
    return out.str();
}

void render_svg(const FunctionFamily& family, const std::vector<DataSet>& datasets, const PlotSpec& spec,
                const std::filesystem::path& path) {
    write_file(path, svg_text(family, datasets, spec));
}

void render_svg(const CloudFamily& clouds, const std::vector<DataSet>& datasets, const PlotSpec& spec,
                const std::filesystem::path& path) {
    write_file(path, svg_text(clouds, datasets, spec));
}

std::string pgm_bytes(const CloudFamily& clouds, const PlotSpec& spec) {
    const auto panels = layout(content_of(clouds, {}), spec);
    const auto w = static_cast<std::size_t>(spec.width);
    const auto h = static_cast<std::size_t>(spec.height);
    std::string pixels(w * h, static_cast<char>(255));
    for (std::size_t k = 0; k < clouds.size(); ++k) {
        const Panel& p = panels[k];
        for (const Point& q : clouds[k].points) {
            if (!p.contains(q)) continue;
            const auto px = static_cast<long long>(std::lround(p.sx(q.x)));
            const auto py = static_cast<long long>(std::lround(p.sy(q.y)));
            if (px < 0 || py < 0 || px >= spec.width || py >= spec.height) continue;
            pixels[static_cast<std::size_t>(py) * w + static_cast<std::size_t>(px)] = 0;
        }
    }
    return "P5\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n" + pixels;
}

void render_pgm(const CloudFamily& clouds, const PlotSpec& spec, const std::filesystem::path& path) {
    write_file(path, pgm_bytes(clouds, spec));
}

}  // namespace gdfif
