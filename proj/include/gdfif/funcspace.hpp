#pragma once

#include "gdfif/maps.hpp"

#include <cstddef>
#include <vector>

namespace gdfif {

/// Piecewise-linear function on a strictly increasing grid.
class SampledFunction {
public:
    SampledFunction() = default;
    SampledFunction(std::size_t vertex, std::vector<double> grid, std::vector<double> values);

    std::size_t vertex() const noexcept { return vertex_; }
    const std::vector<double>& grid() const noexcept { return grid_; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::vector<double>& values() noexcept { return values_; }
    std::size_t size() const noexcept { return grid_.size(); }

    /// Linear interpolation; arguments outside the grid are clamped.
    double operator()(double x) const;

private:
    std::size_t vertex_ = 0;
    std::vector<double> grid_;
    std::vector<double> values_;
};

/// One sampled function per vertex, indexed by vertex.
using FunctionFamily = std::vector<SampledFunction>;

/// Exact sup-norm distance between two piecewise-linear functions, taken over
/// the union of their grids. Throws std::invalid_argument on vertex mismatch.
double sup_distance(const SampledFunction& u, const SampledFunction& v);

/// Max over vertices of sup_distance.
double family_distance(const FunctionFamily& a, const FunctionFamily& b);

/// Output grid of apply_T: `resolution` equally spaced samples on each
/// interval (both ends included, shared knots stored once).
std::vector<double> output_grid(const DataSet& data, std::size_t resolution);

/// Chords joining each data set's endpoints, sampled on the output grid.
FunctionFamily initial_family(const GifsSystem& sys, std::size_t resolution);

/// One application of the Read-Bajraktarevic operator: on interval i of alpha
/// with source beta, value(x) = c t + d F[beta](t) + f where t pulls x back
/// onto beta's span. Knot values are checked against the data and stored
/// exactly. Parallel over samples.
FunctionFamily apply_T(const GifsSystem& sys, const FunctionFamily& family, std::size_t resolution);

struct FixedPointResult {
    FunctionFamily family;
    std::size_t iterations = 0;
    double final_delta = 0.0;
    /// A-priori bound final_delta * r / (1 - r) on the distance to the fixed
    /// point of the sampled operator.
    double error_bound = 0.0;
    bool converged = false;
    std::vector<double> deltas;  // successive-iterate distances, one per iteration
};

/// Iterates apply_T from the chord family until successive iterates are
/// within `tol`. Non-convergence is reported through `converged`.
FixedPointResult fixed_point(const GifsSystem& sys, std::size_t resolution, double tol, std::size_t max_iters);

/// Max over vertices and knots of |F[alpha](x_i) - F_i|.
double interpolation_residual(const GifsSystem& sys, const FunctionFamily& family);

/// Exact sup distance between T(F) and F in the continuous function space.
/// Both are piecewise linear on the output grid refined by the images of the
/// source grids, so evaluating on that set is exact.
double operator_residual(const GifsSystem& sys, const FunctionFamily& family);

/// Distance bound from F to the true interpolant: operator_residual / (1 - r).
double posterior_error_bound(const GifsSystem& sys, const FunctionFamily& family);

/// Evaluates the interpolant of `vertex` at x by peeling `depth` maps, then
/// closing with the chord. Knot abscissas return the data ordinate.
/// Throws std::out_of_range if x lies outside the data set's span.
double evaluate_exact(const GifsSystem& sys, std::size_t vertex, double x, std::size_t depth);

/// Error bound of evaluate_exact at `depth`: r^depth * diameter / (1 - r),
/// where diameter is the distance between the chord family and its image.
double exact_error_bound(const GifsSystem& sys, std::size_t depth);

namespace serial {

/// Single-threaded reference for apply_T, kept for cross-checking the
/// parallel kernel. Uses pull_back directly instead of the aligned grid.
FunctionFamily apply_T(const GifsSystem& sys, const FunctionFamily& family, std::size_t resolution);

}  // namespace serial

}  // namespace gdfif
