#pragma once

#include "gdfif/model.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gdfif {

/// Affine map (x, y) -> (a x + e, c x + d y + f) carrying the graph over the
/// source data set's span onto one interval of the target data set.
struct AffineMap {
    double a = 1.0;
    double c = 0.0;
    double d = 0.0;
    double e = 0.0;
    double f = 0.0;
    std::size_t source = 0;    // zero-based vertex
    std::size_t target = 0;    // zero-based vertex
    std::size_t interval = 0;  // zero-based interval of the target

    Point operator()(Point p) const noexcept { return {a * p.x + e, c * p.x + d * p.y + f}; }

    /// Inverse of the horizontal part: target abscissa -> source abscissa.
    double pull_back(double x) const noexcept { return (x - e) / a; }
};

inline Point apply_map(const AffineMap& m, Point p) noexcept { return m(p); }

/// Raised when a system is requested for input that fails validation.
class InvalidSystem : public std::invalid_argument {
public:
    InvalidSystem(const std::string& what, ValidationReport report)
        : std::invalid_argument(what), report_(std::move(report)) {}
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// Graph-directed IFS built from validated data sets and a wiring plan.
class GifsSystem {
public:
    const std::vector<DataSet>& datasets() const noexcept { return datasets_; }
    const WiringPlan& plan() const noexcept { return plan_; }
    const std::vector<std::vector<AffineMap>>& maps() const noexcept { return maps_; }
    const std::vector<AffineMap>& maps(std::size_t vertex) const { return maps_.at(vertex); }
    std::size_t vertex_count() const noexcept { return datasets_.size(); }

    /// Contraction factor of the function-space operator: max |d|.
    double contraction_factor() const noexcept { return r_; }
    /// Largest horizontal slope a over all maps.
    double max_horizontal_factor() const noexcept { return max_a_; }
    /// d^{alpha beta}: max |d| over maps from beta into alpha (0 if none).
    double pair_factor(std::size_t alpha, std::size_t beta) const;

private:
    friend GifsSystem build_system(std::vector<DataSet>, WiringPlan, Condition3Mode);
    friend GifsSystem build_system_unchecked(std::vector<DataSet>, WiringPlan);

    std::vector<DataSet> datasets_;
    WiringPlan plan_;
    std::vector<std::vector<AffineMap>> maps_;
    double r_ = 0.0;
    double max_a_ = 0.0;
};

/// Coefficients of the unique map sending the source's first and last data
/// points to the target interval's left and right data points.
AffineMap solve_map(const DataSet& source, const DataSet& target, std::size_t interval, double scale);

/// Validates, then solves every map. Throws InvalidSystem if validation fails.
GifsSystem build_system(std::vector<DataSet> datasets, WiringPlan plan,
                        Condition3Mode mode = Condition3Mode::paper_strict);

/// Skips the cross-set width check (still requires well-formed data and a
/// structurally complete plan). Intended for experiments and tests.
GifsSystem build_system_unchecked(std::vector<DataSet> datasets, WiringPlan plan);

/// Max over maps and both endpoints of the coordinate error of
/// omega(source endpoint) against the required target data point.
double endpoint_residuals(const GifsSystem& sys);

/// Max over consecutive interval pairs of the gap between the image of the
/// source's last point under map i and the source's first point under map i+1.
double join_residuals(const GifsSystem& sys);

}  // namespace gdfif
