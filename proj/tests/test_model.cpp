#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace gdfif;
using namespace gdfif::testing;

namespace {

bool has_code(const ValidationReport& r, const std::string& code) {
    return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.code == code; });
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("example 2 data and block wiring validate") {
    const auto report = validate(example2_data(), example2_plan());
    CHECK(report.ok);
    CHECK(report.violations.empty());
    CHECK(report.strongly_connected);
    CHECK(report.mode == Condition3Mode::paper_strict);
}

TEST_CASE("single flat data set validates; width condition is vacuous") {
    const auto report = validate({DataSet({{0, 0}, {1, 0}, {2, 0}})}, WiringPlan({{{0, 0.0}, {0, 0.0}}}));
    CHECK(report.ok);
    CHECK(report.strongly_connected);
}

TEST_CASE("interval wider than the source span violates the width condition") {
    // D1 spans [0,1]; D2 has an interval of width 2 wired to D1.
    const std::vector<DataSet> data{DataSet({{0, 0}, {0.5, 1}, {1, 0}}), DataSet({{0, 0}, {2, 1}, {2.5, 0}})};
    const WiringPlan plan({{{0, 0.2}, {0, 0.2}}, {{0, 0.2}, {1, 0.2}}});

    for (auto mode : {Condition3Mode::paper_strict, Condition3Mode::used_edges_only}) {
        const auto report = validate(data, plan, mode);
        CHECK_FALSE(report.ok);
        REQUIRE(has_code(report, "condition3"));
        const auto it = std::find_if(report.violations.begin(), report.violations.end(),
                                     [](const Violation& v) { return v.code == "condition3"; });
        CHECK(it->indices == std::vector<std::size_t>{2, 1, 1});
    }
}

TEST_CASE("paper-strict also checks pairs that are not wired") {
    // Same data, but D2's wide interval is self-sourced.
    const std::vector<DataSet> data{DataSet({{0, 0}, {0.5, 1}, {1, 0}}), DataSet({{0, 0}, {2, 1}, {2.5, 0}})};
    const WiringPlan plan({{{0, 0.2}, {0, 0.2}}, {{1, 0.2}, {1, 0.2}}});
    CHECK_FALSE(validate(data, plan, Condition3Mode::paper_strict).ok);
    const auto relaxed = validate(data, plan, Condition3Mode::used_edges_only);
    CHECK(relaxed.ok);
    CHECK_FALSE(relaxed.strongly_connected);
}

TEST_CASE("data-set invariants are reported, not thrown") {
    const std::vector<DataSet> data{DataSet({{0, 0}, {1, 1}, {1, 2}}), DataSet({{0, 0}, {1, 1}})};
    const WiringPlan plan({{{0, 0.1}, {0, 0.1}}, {{1, 0.1}}});
    const auto report = validate(data, plan);
    CHECK_FALSE(report.ok);
    CHECK(has_code(report, "abscissa_order"));
    CHECK(has_code(report, "too_few_points"));
}

TEST_CASE("scale factor, interval count and source index violations") {
    const std::vector<DataSet> data{DataSet({{0, 0}, {1, 1}, {2, 0}})};
    CHECK(has_code(validate(data, WiringPlan({{{0, 1.0}, {0, 0.1}}})), "scale_factor"));
    CHECK(has_code(validate(data, WiringPlan({{{0, -1.5}, {0, 0.1}}})), "scale_factor"));
    CHECK(has_code(validate(data, WiringPlan({{{0, 0.1}}})), "interval_count"));
    CHECK(has_code(validate(data, WiringPlan({{{0, 0.1}, {3, 0.1}}})), "source_index"));
    CHECK(validate(data, WiringPlan({{{0, -0.99}, {0, 0.99}}})).ok);
}

TEST_CASE("structural mismatches throw") {
    CHECK_THROWS_AS(validate({}, WiringPlan()), StructuralError);
    CHECK_THROWS_AS(validate(example2_data(), WiringPlan({{{0, 0.1}}})), StructuralError);
}

TEST_CASE("edge counts") {
    CHECK(edge_counts(example2_plan()) == std::vector<std::vector<std::size_t>>{{3, 2}, {1, 3}});
    CHECK(edge_counts(WiringPlan({{{0, 0}, {0, 0}, {0, 0}}})) == std::vector<std::vector<std::size_t>>{{3}});

    // alternating beta, alpha, beta, alpha on four intervals of alpha = 0
    const WiringPlan alternating({{{1, 0}, {0, 0}, {1, 0}, {0, 0}}, {{0, 0}, {1, 0}}});
    const auto k = edge_counts(alternating);
    CHECK(k[0][1] == 2);
    CHECK(k[0][0] == 2);
}

TEST_CASE("row sums equal interval counts and validation is pure (randomized)") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> n_dist(1, 4), pts(3, 7);
        const std::size_t n = n_dist(rng);
        std::vector<DataSet> data;
        std::vector<std::vector<IntervalAssignment>> rows(n);
        std::uniform_int_distribution<std::size_t> src(0, n - 1);
        std::uniform_real_distribution<double> scale(-0.95, 0.95);
        for (std::size_t a = 0; a < n; ++a) {
            data.push_back(random_dataset(rng, pts(rng), 0.1, 1.5));
            for (std::size_t i = 0; i < data[a].intervals(); ++i) rows[a].push_back({src(rng), scale(rng)});
        }
        const WiringPlan plan(rows);
        const auto k = edge_counts(plan);
        for (std::size_t a = 0; a < n; ++a) {
            CHECK(std::accumulate(k[a].begin(), k[a].end(), std::size_t{0}) == data[a].intervals());
        }
        const auto strict = validate(data, plan, Condition3Mode::paper_strict);
        CHECK(strict == validate(data, plan, Condition3Mode::paper_strict));
        const auto relaxed = validate(data, plan, Condition3Mode::used_edges_only);
        if (strict.ok) CHECK(relaxed.ok);
        CHECK(strict.ok == strict.violations.empty());
    }
}

TEST_CASE("condition3 mode names round-trip") {
    CHECK(condition3_mode_from_string(to_string(Condition3Mode::paper_strict)) == Condition3Mode::paper_strict);
    CHECK(condition3_mode_from_string("used-edges-only") == Condition3Mode::used_edges_only);
    CHECK_THROWS_AS(condition3_mode_from_string("loose"), std::invalid_argument);
}

}
