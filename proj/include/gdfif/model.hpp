#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdfif {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// One interpolation data set: ordered points (x_j, F_j), j = 0..N.
///
/// Construction never rejects input; `validate` reports violations so that a
/// whole configuration can be diagnosed in one pass.
class DataSet {
public:
    DataSet() = default;
    explicit DataSet(std::vector<Point> points) : points_(std::move(points)) {}

    const std::vector<Point>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    /// Number of intervals N (one less than the point count).
    std::size_t intervals() const noexcept { return points_.empty() ? 0 : points_.size() - 1; }

    const Point& front() const { return points_.front(); }
    const Point& back() const { return points_.back(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }

    double span() const { return back().x - front().x; }
    double width(std::size_t interval) const { return points_[interval + 1].x - points_[interval].x; }

    /// At least three points and strictly increasing abscissas.
    bool well_formed() const noexcept;

private:
    std::vector<Point> points_;
};

struct IntervalAssignment {
    std::size_t source = 0;  // zero-based vertex index
    double scale = 0.0;      // vertical scaling factor d

    friend bool operator==(const IntervalAssignment&, const IntervalAssignment&) = default;
};

/// Per-vertex, per-interval choice of source vertex and vertical scaling
/// factor. Row alpha has one entry per interval of data set alpha; an entry
/// naming source beta is one edge alpha -> beta of the directed graph.
class WiringPlan {
public:
    WiringPlan() = default;
    explicit WiringPlan(std::vector<std::vector<IntervalAssignment>> rows) : rows_(std::move(rows)) {}

    struct Block {
        std::size_t source = 0;
        std::vector<double> scales;  // one per interval in the block
    };

    /// Contiguous-block shorthand: each vertex lists blocks in order, and the
    /// block sizes are the edge counts K[alpha][source].
    static WiringPlan from_blocks(const std::vector<std::vector<Block>>& blocks);

    std::size_t vertex_count() const noexcept { return rows_.size(); }
    const std::vector<IntervalAssignment>& row(std::size_t vertex) const { return rows_.at(vertex); }
    const std::vector<std::vector<IntervalAssignment>>& rows() const noexcept { return rows_; }

private:
    std::vector<std::vector<IntervalAssignment>> rows_;
};

enum class Condition3Mode {
    paper_strict,     // width/span inequality for every ordered pair of distinct vertices
    used_edges_only,  // only for intervals actually wired to another vertex
};

std::string to_string(Condition3Mode mode);
Condition3Mode condition3_mode_from_string(const std::string& text);

struct Violation {
    std::string code;
    std::string message;
    std::vector<std::size_t> indices;  // one-based, meaning depends on code

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
    bool strongly_connected = false;
    Condition3Mode mode = Condition3Mode::paper_strict;

    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Input that cannot be checked at all (no data sets, plan size mismatch).
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Checks data-set well-formedness, the cross-set width condition, |d| < 1,
/// interval counts and source indices. Never throws for hypothesis
/// violations; throws StructuralError when the plan does not match the data.
ValidationReport validate(const std::vector<DataSet>& datasets, const WiringPlan& plan,
                          Condition3Mode mode = Condition3Mode::paper_strict);

/// K[alpha][beta]: number of intervals of alpha whose source is beta.
/// Out-of-range sources are ignored.
std::vector<std::vector<std::size_t>> edge_counts(const WiringPlan& plan);

/// Strong connectivity of the graph with an edge alpha -> beta for each
/// interval of alpha sourced from beta.
bool strongly_connected(const WiringPlan& plan);

}  // namespace gdfif
