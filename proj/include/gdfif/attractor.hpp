#pragma once

#include "gdfif/maps.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace gdfif {

/// Finite point set approximating the attractor of one vertex.
struct AttractorCloud {
    std::size_t vertex = 0;
    std::vector<Point> points;
    std::size_t generation = 0;
};

using CloudFamily = std::vector<AttractorCloud>;

/// Per-vertex clouds holding the data points.
CloudFamily data_clouds(const GifsSystem& sys);

/// New cloud at alpha = union over alpha's maps of the map applied to every
/// point of the source's cloud. Output order is map order, then point order.
CloudFamily hutchinson_step(const GifsSystem& sys, const CloudFamily& clouds);

/// Thrown when the next step would exceed the configured point cap.
class PointBudgetExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Keeps one point per max-norm cell of side `tolerance` (the first in
/// (x, y) order) and returns the survivors sorted by (x, y).
/// A non-positive tolerance only removes exact duplicates.
std::vector<Point> deduplicate(std::vector<Point> points, double tolerance);

struct AttractorOptions {
    std::size_t generations = 12;
    double dedup_tolerance = 1e-3;
    std::size_t point_cap = 50'000'000;
};

/// Deterministic set iteration from the data points.
CloudFamily iterate_attractor(const GifsSystem& sys, const AttractorOptions& options);

inline CloudFamily iterate_attractor(const GifsSystem& sys, std::size_t generations, double dedup_tolerance) {
    return iterate_attractor(sys, AttractorOptions{generations, dedup_tolerance});
}

/// Random iteration honoring graph direction: keep one current point per
/// vertex; each step picks a target vertex and one of its maps uniformly and
/// replaces the target's current point by the image of the source's current
/// point. The first `burn_in` emissions per vertex are discarded.
/// `total_points` counts all emissions, burn-in included.
CloudFamily chaos_game(const GifsSystem& sys, std::size_t total_points, std::size_t burn_in, std::uint64_t seed);

/// max over p in P of min over q in Q of the max-norm distance.
double directed_hausdorff(std::span<const Point> from, std::span<const Point> to);

/// Symmetric Hausdorff distance in the max-norm. Throws on empty input.
double hausdorff_distance(std::span<const Point> p, std::span<const Point> q);

namespace serial {

CloudFamily hutchinson_step(const GifsSystem& sys, const CloudFamily& clouds);

/// Brute-force O(|P| |Q|) reference.
double directed_hausdorff(std::span<const Point> from, std::span<const Point> to);

}  // namespace serial

}  // namespace gdfif
