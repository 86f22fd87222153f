#include "gdfif/attractor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>

namespace gdfif {

CloudFamily data_clouds(const GifsSystem& sys) {
    CloudFamily clouds;
    for (std::size_t alpha = 0; alpha < sys.vertex_count(); ++alpha) {
        clouds.push_back({alpha, sys.datasets()[alpha].points(), 0});
    }
    return clouds;
}

namespace {

void check_clouds(const GifsSystem& sys, const CloudFamily& clouds) {
    if (clouds.size() != sys.vertex_count()) throw std::invalid_argument("one cloud per vertex is required");
}

std::size_t step_size(const GifsSystem& sys, const CloudFamily& clouds, std::size_t alpha) {
    std::size_t total = 0;
    for (const auto& m : sys.maps(alpha)) total += clouds[m.source].points.size();
    return total;
}

}  // namespace

CloudFamily hutchinson_step(const GifsSystem& sys, const CloudFamily& clouds) {
    check_clouds(sys, clouds);
    CloudFamily out(clouds.size());
    for (std::size_t alpha = 0; alpha < clouds.size(); ++alpha) {
        out[alpha].vertex = alpha;
        out[alpha].generation = clouds[alpha].generation + 1;
        auto& points = out[alpha].points;
        points.resize(step_size(sys, clouds, alpha));

        std::size_t offset = 0;
        for (const auto& m : sys.maps(alpha)) {
            const auto& src = clouds[m.source].points;
            const auto count = static_cast<long long>(src.size());
            Point* dst = points.data() + offset;
#pragma omp parallel for schedule(static)
            for (long long k = 0; k < count; ++k) dst[k] = m(src[static_cast<std::size_t>(k)]);
            offset += src.size();
        }
    }
    return out;
}

std::vector<Point> deduplicate(std::vector<Point> points, double tolerance) {
    auto by_xy = [](const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); };
    if (!(tolerance > 0.0)) {
        std::sort(points.begin(), points.end(), by_xy);
        points.erase(std::unique(points.begin(), points.end()), points.end());
        return points;
    }

    struct Keyed {
        std::int64_t cx, cy;
        Point p;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(points.size());
    for (const Point& p : points) {
        keyed.push_back({static_cast<std::int64_t>(std::floor(p.x / tolerance)),
                         static_cast<std::int64_t>(std::floor(p.y / tolerance)), p});
    }
    std::sort(keyed.begin(), keyed.end(), [&](const Keyed& a, const Keyed& b) {
        if (a.cx != b.cx) return a.cx < b.cx;
        if (a.cy != b.cy) return a.cy < b.cy;
        return by_xy(a.p, b.p);
    });
    auto last = std::unique(keyed.begin(), keyed.end(),
                            [](const Keyed& a, const Keyed& b) { return a.cx == b.cx && a.cy == b.cy; });

    std::vector<Point> kept;
    kept.reserve(static_cast<std::size_t>(last - keyed.begin()));
    for (auto it = keyed.begin(); it != last; ++it) kept.push_back(it->p);
    std::sort(kept.begin(), kept.end(), by_xy);
    return kept;
}

CloudFamily iterate_attractor(const GifsSystem& sys, const AttractorOptions& options) {
    if (options.generations < 1) throw std::invalid_argument("generations must be at least 1");
    CloudFamily clouds = data_clouds(sys);
    for (std::size_t g = 0; g < options.generations; ++g) {
        for (std::size_t alpha = 0; alpha < clouds.size(); ++alpha) {
            const std::size_t next = step_size(sys, clouds, alpha);
            if (next > options.point_cap) {
                throw PointBudgetExceeded("generation " + std::to_string(g + 1) + " would hold " +
                                          std::to_string(next) + " points at vertex " + std::to_string(alpha + 1) +
                                          " (cap " + std::to_string(options.point_cap) + ")");
            }
        }
        clouds = hutchinson_step(sys, clouds);
        for (auto& cloud : clouds) cloud.points = deduplicate(std::move(cloud.points), options.dedup_tolerance);
    }
    return clouds;
}

CloudFamily chaos_game(const GifsSystem& sys, std::size_t total_points, std::size_t burn_in, std::uint64_t seed) {
    if (!(total_points > burn_in)) throw std::invalid_argument("total_points must exceed burn_in");
    const std::size_t n = sys.vertex_count();

    CloudFamily clouds(n);
    std::vector<Point> current(n);
    std::vector<std::size_t> emitted(n, 0);
    for (std::size_t alpha = 0; alpha < n; ++alpha) {
        clouds[alpha].vertex = alpha;
        clouds[alpha].generation = 1;
        current[alpha] = sys.datasets()[alpha].front();
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_vertex(0, n - 1);
    for (std::size_t step = 0; step < total_points; ++step) {
        const std::size_t alpha = pick_vertex(rng);
        const auto& maps = sys.maps(alpha);
        std::uniform_int_distribution<std::size_t> pick_map(0, maps.size() - 1);
        const AffineMap& m = maps[pick_map(rng)];
        current[alpha] = m(current[m.source]);
        if (emitted[alpha]++ >= burn_in) clouds[alpha].points.push_back(current[alpha]);
    }
    return clouds;
}

namespace {

double chebyshev(Point a, Point b) { return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)); }

// Uniform bucket grid over a point set for nearest-neighbour queries in the
// max-norm.
class BucketGrid {
public:
    explicit BucketGrid(std::span<const Point> points) : points_(points) {
        double x0 = points[0].x, x1 = x0, y0 = points[0].y, y1 = y0;
        for (const Point& p : points) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
        origin_ = {x0, y0};
        const double w = x1 - x0;
        const double h = y1 - y0;
        const auto n = static_cast<double>(points.size());
        cell_ = std::max({std::sqrt(w * h / n), std::max(w, h) / n, 1e-300});
        nx_ = static_cast<std::size_t>(w / cell_) + 1;
        ny_ = static_cast<std::size_t>(h / cell_) + 1;

        start_.assign(nx_ * ny_ + 1, 0);
        std::vector<std::size_t> ids(points.size());
        for (std::size_t k = 0; k < points.size(); ++k) {
            ids[k] = cell_of(points[k]);
            ++start_[ids[k] + 1];
        }
        for (std::size_t c = 0; c < nx_ * ny_; ++c) start_[c + 1] += start_[c];
        order_.resize(points.size());
        std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
        for (std::size_t k = 0; k < points.size(); ++k) order_[fill[ids[k]]++] = k;
    }

    double nearest(Point p) const {
        const auto cx = clamp_index((p.x - origin_.x) / cell_, nx_);
        const auto cy = clamp_index((p.y - origin_.y) / cell_, ny_);
        const auto max_ring = static_cast<long long>(std::max(nx_, ny_));
        double best = std::numeric_limits<double>::infinity();
        for (long long ring = 0; ring <= max_ring; ++ring) {
            for (long long j = cy - ring; j <= cy + ring; ++j) {
                if (j < 0 || j >= static_cast<long long>(ny_)) continue;
                const bool edge_row = j == cy - ring || j == cy + ring;
                for (long long i = cx - ring; i <= cx + ring; i += edge_row ? 1 : 2 * std::max(ring, 1LL)) {
                    if (i < 0 || i >= static_cast<long long>(nx_)) continue;
                    const auto c = static_cast<std::size_t>(j) * nx_ + static_cast<std::size_t>(i);
                    for (std::size_t s = start_[c]; s < start_[c + 1]; ++s) {
                        best = std::min(best, chebyshev(p, points_[order_[s]]));
                    }
                }
            }
            // Unvisited cells lie at least `ring` whole cells away.
            if (best <= static_cast<double>(ring) * cell_) break;
        }
        return best;
    }

private:
    std::size_t cell_of(Point p) const {
        const auto i = static_cast<std::size_t>(clamp_index((p.x - origin_.x) / cell_, nx_));
        const auto j = static_cast<std::size_t>(clamp_index((p.y - origin_.y) / cell_, ny_));
        return j * nx_ + i;
    }

    static long long clamp_index(double v, std::size_t n) {
        if (!(v > 0.0)) return 0;
        if (v >= static_cast<double>(n - 1)) return static_cast<long long>(n - 1);
        return static_cast<long long>(v);
    }

    std::span<const Point> points_;
    Point origin_;
    double cell_ = 1.0;
    std::size_t nx_ = 1, ny_ = 1;
    std::vector<std::size_t> start_;
    std::vector<std::size_t> order_;
};

}  // namespace

double directed_hausdorff(std::span<const Point> from, std::span<const Point> to) {
    if (from.empty() || to.empty()) throw std::invalid_argument("hausdorff distance of an empty point set");
    const BucketGrid grid(to);
    const auto count = static_cast<long long>(from.size());
    double worst = 0.0;
#pragma omp parallel for schedule(dynamic, 1024) reduction(max : worst)
    for (long long k = 0; k < count; ++k) worst = std::max(worst, grid.nearest(from[static_cast<std::size_t>(k)]));
    return worst;
}

double hausdorff_distance(std::span<const Point> p, std::span<const Point> q) {
    return std::max(directed_hausdorff(p, q), directed_hausdorff(q, p));
}

namespace serial {

CloudFamily hutchinson_step(const GifsSystem& sys, const CloudFamily& clouds) {
    CloudFamily out;
    for (std::size_t alpha = 0; alpha < sys.vertex_count(); ++alpha) {
        AttractorCloud cloud{alpha, {}, clouds.at(alpha).generation + 1};
        for (const auto& m : sys.maps(alpha)) {
            for (const Point& p : clouds.at(m.source).points) cloud.points.push_back(apply_map(m, p));
        }
        out.push_back(std::move(cloud));
    }
    return out;
}

double directed_hausdorff(std::span<const Point> from, std::span<const Point> to) {
    if (from.empty() || to.empty()) throw std::invalid_argument("hausdorff distance of an empty point set");
    double worst = 0.0;
    for (const Point& p : from) {
        double best = std::numeric_limits<double>::infinity();
        for (const Point& q : to) best = std::min(best, chebyshev(p, q));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace serial

}  // namespace gdfif
