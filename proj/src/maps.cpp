#include "gdfif/maps.hpp"

#include <algorithm>
#include <cmath>

namespace gdfif {

AffineMap solve_map(const DataSet& source, const DataSet& target, std::size_t interval, double scale) {
    const Point first = source.front();
    const Point last = source.back();
    const Point left = target[interval];
    const Point right = target[interval + 1];
    const double span = last.x - first.x;

    AffineMap m;
    m.d = scale;
    m.a = (right.x - left.x) / span;
    m.e = (last.x * left.x - first.x * right.x) / span;
    m.c = (right.y - left.y) / span - scale * (last.y - first.y) / span;
    m.f = (last.x * left.y - first.x * right.y) / span - scale * (last.x * first.y - first.x * last.y) / span;
    m.interval = interval;
    return m;
}

namespace {

void fill_maps(std::vector<std::vector<AffineMap>>& maps, double& r, double& max_a,
               const std::vector<DataSet>& datasets, const WiringPlan& plan) {
    maps.assign(datasets.size(), {});
    r = 0.0;
    max_a = 0.0;
    for (std::size_t alpha = 0; alpha < datasets.size(); ++alpha) {
        const auto& row = plan.row(alpha);
        maps[alpha].reserve(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) {
            AffineMap m = solve_map(datasets[row[i].source], datasets[alpha], i, row[i].scale);
            m.source = row[i].source;
            m.target = alpha;
            r = std::max(r, std::abs(m.d));
            max_a = std::max(max_a, m.a);
            maps[alpha].push_back(m);
        }
    }
}

}  // namespace

double GifsSystem::pair_factor(std::size_t alpha, std::size_t beta) const {
    double best = 0.0;
    for (const auto& m : maps_.at(alpha)) {
        if (m.source == beta) best = std::max(best, std::abs(m.d));
    }
    return best;
}

GifsSystem build_system(std::vector<DataSet> datasets, WiringPlan plan, Condition3Mode mode) {
    ValidationReport report = validate(datasets, plan, mode);
    if (!report.ok) {
        std::string what = "data sets and wiring fail validation";
        if (!report.violations.empty()) what += ": " + report.violations.front().message;
        throw InvalidSystem(what, std::move(report));
    }
    GifsSystem sys;
    sys.datasets_ = std::move(datasets);
    sys.plan_ = std::move(plan);
    fill_maps(sys.maps_, sys.r_, sys.max_a_, sys.datasets_, sys.plan_);
    return sys;
}

GifsSystem build_system_unchecked(std::vector<DataSet> datasets, WiringPlan plan) {
    // Still refuse anything the formulas cannot be evaluated on.
    ValidationReport report = validate(datasets, plan, Condition3Mode::used_edges_only);
    const bool fatal = std::any_of(report.violations.begin(), report.violations.end(), [](const Violation& v) {
        return v.code != "condition3";
    });
    if (fatal) throw InvalidSystem("data sets and wiring are malformed", std::move(report));
    GifsSystem sys;
    sys.datasets_ = std::move(datasets);
    sys.plan_ = std::move(plan);
    fill_maps(sys.maps_, sys.r_, sys.max_a_, sys.datasets_, sys.plan_);
    return sys;
}

double endpoint_residuals(const GifsSystem& sys) {
    double worst = 0.0;
    for (const auto& row : sys.maps()) {
        for (const auto& m : row) {
            const DataSet& src = sys.datasets()[m.source];
            const DataSet& dst = sys.datasets()[m.target];
            const Point lo = m(src.front());
            const Point hi = m(src.back());
            worst = std::max({worst, std::abs(lo.x - dst[m.interval].x), std::abs(lo.y - dst[m.interval].y),
                              std::abs(hi.x - dst[m.interval + 1].x), std::abs(hi.y - dst[m.interval + 1].y)});
        }
    }
    return worst;
}

double join_residuals(const GifsSystem& sys) {
    double worst = 0.0;
    for (const auto& row : sys.maps()) {
        for (std::size_t i = 0; i + 1 < row.size(); ++i) {
            const Point end = row[i](sys.datasets()[row[i].source].back());
            const Point start = row[i + 1](sys.datasets()[row[i + 1].source].front());
            worst = std::max({worst, std::abs(end.x - start.x), std::abs(end.y - start.y)});
        }
    }
    return worst;
}

}  // namespace gdfif
