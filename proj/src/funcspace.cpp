#include "gdfif/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gdfif {

SampledFunction::SampledFunction(std::size_t vertex, std::vector<double> grid, std::vector<double> values)
    : vertex_(vertex), grid_(std::move(grid)), values_(std::move(values)) {
    if (grid_.size() != values_.size()) throw std::invalid_argument("grid and values differ in length");
    if (grid_.size() < 2) throw std::invalid_argument("a sampled function needs at least two samples");
    for (std::size_t k = 1; k < grid_.size(); ++k) {
        if (!(grid_[k - 1] < grid_[k])) throw std::invalid_argument("grid must be strictly increasing");
    }
}

double SampledFunction::operator()(double x) const {
    if (x <= grid_.front()) return values_.front();
    if (x >= grid_.back()) return values_.back();
    const auto hi = static_cast<std::size_t>(std::upper_bound(grid_.begin(), grid_.end(), x) - grid_.begin());
    const std::size_t lo = hi - 1;
    const double x0 = grid_[lo];
    const double x1 = grid_[hi];
    if (x == x0) return values_[lo];
    const double s = (x - x0) / (x1 - x0);
    return values_[lo] + s * (values_[hi] - values_[lo]);
}

double sup_distance(const SampledFunction& u, const SampledFunction& v) {
    if (u.vertex() != v.vertex()) {
        throw std::invalid_argument("sup_distance: vertex " + std::to_string(u.vertex() + 1) + " vs " +
                                    std::to_string(v.vertex() + 1));
    }
    std::vector<double> merged;
    merged.reserve(u.size() + v.size());
    std::merge(u.grid().begin(), u.grid().end(), v.grid().begin(), v.grid().end(), std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    double worst = 0.0;
    for (double x : merged) worst = std::max(worst, std::abs(u(x) - v(x)));
    return worst;
}

double family_distance(const FunctionFamily& a, const FunctionFamily& b) {
    if (a.size() != b.size()) throw std::invalid_argument("family_distance: vertex sets differ");
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, sup_distance(a[k], b[k]));
    return worst;
}

std::vector<double> output_grid(const DataSet& data, std::size_t resolution) {
    if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
    const std::size_t steps = resolution - 1;
    std::vector<double> grid;
    grid.reserve(data.intervals() * steps + 1);
    for (std::size_t i = 0; i < data.intervals(); ++i) {
        const double left = data[i].x;
        const double width = data[i + 1].x - left;
        for (std::size_t k = 0; k < steps; ++k) {
            grid.push_back(left + width * static_cast<double>(k) / static_cast<double>(steps));
        }
    }
    grid.push_back(data.back().x);
    return grid;
}

namespace {

double chord(const DataSet& data, double x) {
    const Point a = data.front();
    const Point b = data.back();
    return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

void check_admissible(const GifsSystem& sys, const FunctionFamily& family) {
    if (family.size() != sys.vertex_count()) throw std::invalid_argument("family does not match the system's vertices");
    for (std::size_t alpha = 0; alpha < family.size(); ++alpha) {
        const auto& fn = family[alpha];
        const auto& data = sys.datasets()[alpha];
        if (fn.vertex() != alpha) throw std::invalid_argument("family is not indexed by vertex");
        if (fn.grid().front() != data.front().x || fn.grid().back() != data.back().x) {
            throw std::invalid_argument("function " + std::to_string(alpha + 1) + " is not defined on its data span");
        }
    }
}

// Knot values are reproduced by the map coefficients up to round-off; anything
// larger means the maps and data have drifted apart.
void check_knot(double computed, double expected, std::size_t vertex, std::size_t knot) {
    const double tol = 1e-9 * (1.0 + std::abs(expected));
    if (!(std::abs(computed - expected) <= tol)) {
        throw std::logic_error("knot " + std::to_string(knot) + " of vertex " + std::to_string(vertex + 1) +
                               " is not reproduced by the operator");
    }
}

}  // namespace

FunctionFamily initial_family(const GifsSystem& sys, std::size_t resolution) {
    FunctionFamily family;
    family.reserve(sys.vertex_count());
    for (std::size_t alpha = 0; alpha < sys.vertex_count(); ++alpha) {
        const auto& data = sys.datasets()[alpha];
        auto grid = output_grid(data, resolution);
        std::vector<double> values(grid.size());
        for (std::size_t k = 0; k < grid.size(); ++k) values[k] = chord(data, grid[k]);
        values.front() = data.front().y;
        values.back() = data.back().y;
        family.emplace_back(alpha, std::move(grid), std::move(values));
    }
    return family;
}

FunctionFamily apply_T(const GifsSystem& sys, const FunctionFamily& family, std::size_t resolution) {
    check_admissible(sys, family);
    if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
    const std::size_t steps = resolution - 1;
    const auto inv_steps = 1.0 / static_cast<double>(steps);

    FunctionFamily out;
    out.reserve(sys.vertex_count());
    for (std::size_t alpha = 0; alpha < sys.vertex_count(); ++alpha) {
        const auto& data = sys.datasets()[alpha];
        const auto& maps = sys.maps(alpha);
        auto grid = output_grid(data, resolution);
        std::vector<double> values(grid.size());
        const auto count = static_cast<long long>(grid.size());

        // Each output sample reads one source function and writes one slot.
#pragma omp parallel for schedule(static)
        for (long long idx = 0; idx < count; ++idx) {
            const auto k = static_cast<std::size_t>(idx);
            const std::size_t i = std::min(k / steps, maps.size() - 1);
            const std::size_t local = k - i * steps;
            const AffineMap& m = maps[i];
            const DataSet& src = sys.datasets()[m.source];
            const double t = local == steps ? src.back().x
                                            : src.front().x + src.span() * static_cast<double>(local) * inv_steps;
            values[k] = m.c * t + m.d * family[m.source](t) + m.f;
        }

        // Both one-sided formulas must agree with the data at every knot.
        for (std::size_t i = 0; i <= maps.size(); ++i) {
            const double expected = data[i].y;
            if (i > 0) {
                const AffineMap& m = maps[i - 1];
                const DataSet& src = sys.datasets()[m.source];
                check_knot(m.c * src.back().x + m.d * family[m.source].values().back() + m.f, expected, alpha, i);
            }
            if (i < maps.size()) {
                const AffineMap& m = maps[i];
                const DataSet& src = sys.datasets()[m.source];
                check_knot(m.c * src.front().x + m.d * family[m.source].values().front() + m.f, expected, alpha, i);
            }
            values[i * steps] = expected;
        }
        out.emplace_back(alpha, std::move(grid), std::move(values));
    }
    return out;
}

FixedPointResult fixed_point(const GifsSystem& sys, std::size_t resolution, double tol, std::size_t max_iters) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const double r = sys.contraction_factor();
    if (!(r < 1.0)) throw std::invalid_argument("contraction factor must be below 1");

    FixedPointResult result;
    result.family = initial_family(sys, resolution);
    for (std::size_t it = 1; it <= max_iters; ++it) {
        FunctionFamily next = apply_T(sys, result.family, resolution);
        const double delta = family_distance(next, result.family);
        result.family = std::move(next);
        result.iterations = it;
        result.final_delta = delta;
        result.deltas.push_back(delta);
        if (delta <= tol) {
            result.converged = true;
            break;
        }
    }
    result.error_bound = result.final_delta * r / (1.0 - r);
    return result;
}

double interpolation_residual(const GifsSystem& sys, const FunctionFamily& family) {
    check_admissible(sys, family);
    double worst = 0.0;
    for (std::size_t alpha = 0; alpha < family.size(); ++alpha) {
        for (const Point& p : sys.datasets()[alpha].points()) {
            worst = std::max(worst, std::abs(family[alpha](p.x) - p.y));
        }
    }
    return worst;
}

double operator_residual(const GifsSystem& sys, const FunctionFamily& family) {
    check_admissible(sys, family);
    double worst = 0.0;
    for (std::size_t alpha = 0; alpha < family.size(); ++alpha) {
        const auto& fn = family[alpha];
        for (const AffineMap& m : sys.maps(alpha)) {
            const auto& src = family[m.source];
            const double left = sys.datasets()[alpha][m.interval].x;
            const double right = sys.datasets()[alpha][m.interval + 1].x;

            // Breakpoints of T(F) on this interval: images of source samples
            // (values known exactly) and the output samples (pull back).
            for (std::size_t k = 0; k < src.size(); ++k) {
                const double t = src.grid()[k];
                const double x = std::clamp(m.a * t + m.e, left, right);
                worst = std::max(worst, std::abs(m.c * t + m.d * src.values()[k] + m.f - fn(x)));
            }
            const auto lo = std::lower_bound(fn.grid().begin(), fn.grid().end(), left);
            const auto hi = std::upper_bound(fn.grid().begin(), fn.grid().end(), right);
            for (auto it = lo; it != hi; ++it) {
                const auto k = static_cast<std::size_t>(it - fn.grid().begin());
                const double t = m.pull_back(*it);
                worst = std::max(worst, std::abs(m.c * t + m.d * src(t) + m.f - fn.values()[k]));
            }
        }
    }
    return worst;
}

double posterior_error_bound(const GifsSystem& sys, const FunctionFamily& family) {
    return operator_residual(sys, family) / (1.0 - sys.contraction_factor());
}

double evaluate_exact(const GifsSystem& sys, std::size_t vertex, double x, std::size_t depth) {
    if (vertex >= sys.vertex_count()) throw std::out_of_range("vertex index out of range");
    if (depth < 1) throw std::invalid_argument("depth must be at least 1");
    {
        const auto& data = sys.datasets()[vertex];
        if (!(x >= data.front().x && x <= data.back().x)) {
            throw std::out_of_range("x = " + std::to_string(x) + " lies outside the span of data set " +
                                    std::to_string(vertex + 1));
        }
    }

    // value = offset + scale * (value of the pulled-back point one level down)
    double offset = 0.0;
    double scale = 1.0;
    std::size_t alpha = vertex;
    for (std::size_t level = 0; level < depth; ++level) {
        const auto& data = sys.datasets()[alpha];
        const auto& knots = data.points();
        const auto hit = std::lower_bound(knots.begin(), knots.end(), x,
                                          [](const Point& p, double v) { return p.x < v; });
        if (hit != knots.end() && hit->x == x) return offset + scale * hit->y;

        // x_i closes interval i; x_0 belongs to the first interval.
        const auto i = static_cast<std::size_t>(hit - knots.begin()) - 1;
        const AffineMap& m = sys.maps(alpha)[i];
        const DataSet& src = sys.datasets()[m.source];
        const double t = std::clamp(m.pull_back(x), src.front().x, src.back().x);
        offset += scale * (m.c * t + m.f);
        scale *= m.d;
        alpha = m.source;
        x = t;
        if (scale == 0.0) return offset;
    }
    return offset + scale * chord(sys.datasets()[alpha], x);
}

double exact_error_bound(const GifsSystem& sys, std::size_t depth) {
    // T maps a chord to the piecewise-linear interpolant of the data, so the
    // first step's sup distance is attained at a knot.
    double diameter = 0.0;
    for (const auto& data : sys.datasets()) {
        for (const Point& p : data.points()) diameter = std::max(diameter, std::abs(p.y - chord(data, p.x)));
    }
    const double r = sys.contraction_factor();
    return std::pow(r, static_cast<double>(depth)) * diameter / (1.0 - r);
}

namespace serial {

FunctionFamily apply_T(const GifsSystem& sys, const FunctionFamily& family, std::size_t resolution) {
    FunctionFamily out;
    for (std::size_t alpha = 0; alpha < sys.vertex_count(); ++alpha) {
        const auto& data = sys.datasets()[alpha];
        auto grid = output_grid(data, resolution);
        std::vector<double> values(grid.size());
        std::size_t interval = 0;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const double x = grid[k];
            while (interval + 1 < data.intervals() && x > data[interval + 1].x) ++interval;
            const AffineMap& m = sys.maps(alpha)[interval];
            const double t = m.pull_back(x);
            values[k] = m.c * t + m.d * family[m.source](t) + m.f;
        }
        for (std::size_t i = 0; i < data.size(); ++i) values[i * (resolution - 1)] = data[i].y;
        out.emplace_back(alpha, std::move(grid), std::move(values));
    }
    return out;
}

}  // namespace serial

}  // namespace gdfif
