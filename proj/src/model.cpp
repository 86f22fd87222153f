#include "gdfif/model.hpp"

#include <cmath>
#include <sstream>

namespace gdfif {

bool DataSet::well_formed() const noexcept {
    if (points_.size() < 3) return false;
    for (std::size_t j = 1; j < points_.size(); ++j) {
        if (!(points_[j - 1].x < points_[j].x)) return false;
    }
    return true;
}

WiringPlan WiringPlan::from_blocks(const std::vector<std::vector<Block>>& blocks) {
    std::vector<std::vector<IntervalAssignment>> rows(blocks.size());
    for (std::size_t alpha = 0; alpha < blocks.size(); ++alpha) {
        for (const auto& block : blocks[alpha]) {
            for (double d : block.scales) rows[alpha].push_back({block.source, d});
        }
    }
    return WiringPlan(std::move(rows));
}

std::string to_string(Condition3Mode mode) {
    return mode == Condition3Mode::paper_strict ? "paper-strict" : "used-edges-only";
}

Condition3Mode condition3_mode_from_string(const std::string& text) {
    if (text == "paper-strict") return Condition3Mode::paper_strict;
    if (text == "used-edges-only") return Condition3Mode::used_edges_only;
    throw std::invalid_argument("unknown condition3_mode '" + text +
                                "' (expected paper-strict or used-edges-only)");
}

namespace {

template <typename... Args>
std::string concat(const Args&... args) {
    std::ostringstream out;
    out.precision(17);
    (out << ... << args);
    return out.str();
}

void check_dataset(const DataSet& data, std::size_t alpha, std::vector<Violation>& out) {
    if (data.size() < 3) {
        out.push_back({"too_few_points",
                       concat("data set ", alpha + 1, " has ", data.size(), " points; at least 3 required"),
                       {alpha + 1}});
    }
    for (std::size_t j = 1; j < data.size(); ++j) {
        if (!(data[j - 1].x < data[j].x)) {
            out.push_back({"abscissa_order",
                           concat("data set ", alpha + 1, ": x[", j - 1, "] = ", data[j - 1].x,
                                  " is not below x[", j, "] = ", data[j].x),
                           {alpha + 1, j}});
        }
    }
}

// Interval `j` of data set `beta` measured against the span of data set `alpha`.
void check_width(const std::vector<DataSet>& datasets, std::size_t beta, std::size_t j,
                 std::size_t alpha, std::vector<Violation>& out) {
    const double ratio = datasets[beta].width(j) / datasets[alpha].span();
    if (!(ratio < 1.0)) {
        out.push_back({"condition3",
                       concat("interval ", j + 1, " of data set ", beta + 1, " has width ",
                              datasets[beta].width(j), ", not below the span ", datasets[alpha].span(),
                              " of data set ", alpha + 1, " (ratio ", ratio, ")"),
                       {beta + 1, j + 1, alpha + 1}});
    }
}

}  // namespace

ValidationReport validate(const std::vector<DataSet>& datasets, const WiringPlan& plan,
                          Condition3Mode mode) {
    if (datasets.empty()) throw StructuralError("no data sets given");
    if (plan.vertex_count() != datasets.size()) {
        throw StructuralError(concat("wiring plan has ", plan.vertex_count(), " vertices but ",
                                     datasets.size(), " data sets were given"));
    }
    const std::size_t n = datasets.size();

    ValidationReport report;
    report.mode = mode;
    auto& v = report.violations;

    std::vector<bool> usable(n);
    for (std::size_t alpha = 0; alpha < n; ++alpha) {
        check_dataset(datasets[alpha], alpha, v);
        usable[alpha] = datasets[alpha].well_formed();
    }

    for (std::size_t alpha = 0; alpha < n; ++alpha) {
        const auto& row = plan.row(alpha);
        if (row.size() != datasets[alpha].intervals()) {
            v.push_back({"interval_count",
                         concat("vertex ", alpha + 1, " has ", row.size(), " assignments for ",
                                datasets[alpha].intervals(), " intervals"),
                         {alpha + 1}});
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i].source >= n) {
                v.push_back({"source_index",
                             concat("vertex ", alpha + 1, " interval ", i + 1, " names source ",
                                    row[i].source + 1, " outside 1..", n),
                             {alpha + 1, i + 1}});
            }
            if (!(std::abs(row[i].scale) < 1.0)) {
                v.push_back({"scale_factor",
                             concat("vertex ", alpha + 1, " interval ", i + 1, ": |d| = ",
                                    std::abs(row[i].scale), " is not below 1"),
                             {alpha + 1, i + 1}});
            }
        }
    }

    if (mode == Condition3Mode::paper_strict) {
        for (std::size_t alpha = 0; alpha < n; ++alpha) {
            for (std::size_t beta = 0; beta < n; ++beta) {
                if (alpha == beta || !usable[alpha] || !usable[beta]) continue;
                for (std::size_t j = 0; j < datasets[beta].intervals(); ++j) {
                    check_width(datasets, beta, j, alpha, v);
                }
            }
        }
    } else {
        // A map into interval i of alpha from source beta has x-slope
        // width_i(alpha) / span(beta).
        for (std::size_t alpha = 0; alpha < n; ++alpha) {
            const auto& row = plan.row(alpha);
            for (std::size_t i = 0; i < row.size(); ++i) {
                const std::size_t beta = row[i].source;
                if (beta >= n || beta == alpha || !usable[alpha] || !usable[beta]) continue;
                if (i >= datasets[alpha].intervals()) continue;
                check_width(datasets, alpha, i, beta, v);
            }
        }
    }

    report.ok = v.empty();
    report.strongly_connected = strongly_connected(plan);
    return report;
}

std::vector<std::vector<std::size_t>> edge_counts(const WiringPlan& plan) {
    const std::size_t n = plan.vertex_count();
    std::vector<std::vector<std::size_t>> counts(n, std::vector<std::size_t>(n, 0));
    for (std::size_t alpha = 0; alpha < n; ++alpha) {
        for (const auto& assignment : plan.row(alpha)) {
            if (assignment.source < n) ++counts[alpha][assignment.source];
        }
    }
    return counts;
}

bool strongly_connected(const WiringPlan& plan) {
    const auto counts = edge_counts(plan);
    const std::size_t n = counts.size();
    for (std::size_t start = 0; start < n; ++start) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < n; ++w) {
                if (counts[u][w] > 0 && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        for (bool s : seen) {
            if (!s) return false;
        }
    }
    return true;
}

}  // namespace gdfif
