#pragma once

#include "gdfif/maps.hpp"

#include <random>
#include <vector>

namespace gdfif::testing {

inline DataSet example1_data() { return DataSet({{0, 0}, {3, 5}, {6, 4}, {10, 1}}); }

inline GifsSystem example1() {
    return build_system({example1_data()}, WiringPlan({{{0, 0.25}, {0, 0.5}, {0, 0.25}}}));
}

inline std::vector<DataSet> example2_data() {
    return {DataSet({{0, 5}, {1, 4}, {2, 1}, {3, 1}, {4, 4}, {5, 5}}),
            DataSet({{0, 1}, {1, 2}, {2, 3}, {3, 2}, {4, 1}})};
}

inline WiringPlan example2_plan() {
    const double third = 1.0 / 3.0;
    return WiringPlan::from_blocks({
        {{0, {third, third, third}}, {1, {third, third}}},
        {{0, {third}}, {1, {third, third, third}}},
    });
}

inline GifsSystem example2() { return build_system(example2_data(), example2_plan()); }

inline GifsSystem example2b() {
    const double third = 1.0 / 3.0;
    return build_system(example2_data(), WiringPlan::from_blocks({
                                             {{0, {0.25, 0.25, 0.25}}, {1, {third, third}}},
                                             {{0, {0.25}}, {1, {0.5, 0.5, 0.5}}},
                                         }));
}

inline GifsSystem flat() {
    return build_system({DataSet({{0, 0}, {1, 0}, {2, 0}})}, WiringPlan({{{0, 0.0}, {0, 0.0}}}));
}

/// Random data set with `points` points, gaps in [min_gap, max_gap].
inline DataSet random_dataset(std::mt19937_64& rng, std::size_t points, double min_gap = 0.2, double max_gap = 1.0) {
    std::uniform_real_distribution<double> gap(min_gap, max_gap);
    std::uniform_real_distribution<double> start(-3.0, 3.0);
    std::uniform_real_distribution<double> value(-5.0, 5.0);
    std::vector<Point> pts;
    double x = start(rng);
    for (std::size_t k = 0; k < points; ++k) {
        pts.push_back({x, value(rng)});
        x += gap(rng);
    }
    return DataSet(std::move(pts));
}

/// Random two-vertex system satisfying the cross-set width condition, with
/// random sources and d uniform in (-dmax, dmax).
inline GifsSystem random_two_vertex_system(std::mt19937_64& rng, double dmax = 0.9) {
    std::uniform_int_distribution<std::size_t> count(3, 8);
    std::uniform_int_distribution<std::size_t> source(0, 1);
    std::uniform_real_distribution<double> scale(-dmax, dmax);
    for (;;) {
        std::vector<DataSet> data{random_dataset(rng, count(rng)), random_dataset(rng, count(rng))};
        std::vector<std::vector<IntervalAssignment>> rows(2);
        for (std::size_t alpha = 0; alpha < 2; ++alpha) {
            for (std::size_t i = 0; i < data[alpha].intervals(); ++i) rows[alpha].push_back({source(rng), scale(rng)});
        }
        WiringPlan plan(std::move(rows));
        if (validate(data, plan).ok) return build_system(std::move(data), std::move(plan));
    }
}

inline GifsSystem random_single_system(std::mt19937_64& rng, double dmax = 0.9) {
    std::uniform_int_distribution<std::size_t> count(3, 9);
    std::uniform_real_distribution<double> scale(-dmax, dmax);
    DataSet data = random_dataset(rng, count(rng));
    std::vector<IntervalAssignment> row;
    for (std::size_t i = 0; i < data.intervals(); ++i) row.push_back({0, scale(rng)});
    return build_system({std::move(data)}, WiringPlan({row}));
}

}  // namespace gdfif::testing
