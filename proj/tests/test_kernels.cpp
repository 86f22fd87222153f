// Parallel kernels against their serial references.

#include "fixtures.hpp"

#include "gdfif/attractor.hpp"
#include "gdfif/funcspace.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace gdfif;
using namespace gdfif::testing;

TEST_SUITE("kernels") {

TEST_CASE("apply_T matches the serial reference") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> noise(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto sys = random_two_vertex_system(rng);
        auto family = initial_family(sys, 40);
        for (auto& fn : family) {
            for (std::size_t k = 1; k + 1 < fn.size(); ++k) fn.values()[k] += noise(rng);
        }
        const auto fast = apply_T(sys, family, 40);
        const auto ref = serial::apply_T(sys, family, 40);
        CHECK(family_distance(fast, ref) <= 1e-10);
    }
}

TEST_CASE("hutchinson_step matches the serial reference exactly") {
    const auto sys = example2();
    auto clouds = data_clouds(sys);
    for (int g = 0; g < 4; ++g) {
        const auto fast = hutchinson_step(sys, clouds);
        const auto ref = serial::hutchinson_step(sys, clouds);
        for (std::size_t a = 0; a < 2; ++a) {
            CHECK(fast[a].points == ref[a].points);
            CHECK(fast[a].generation == ref[a].generation);
        }
        clouds = fast;
    }
}

TEST_CASE("grid Hausdorff matches brute force") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Point> p(1 + trial * 13), q(1 + trial * 7);
        for (auto& pt : p) pt = {u(rng) * 3, u(rng) * (trial % 3 == 0 ? 0.0 : 1.0)};
        for (auto& pt : q) pt = {u(rng), u(rng) * 5};
        CHECK(directed_hausdorff(p, q) == serial::directed_hausdorff(p, q));
        CHECK(directed_hausdorff(q, p) == serial::directed_hausdorff(q, p));
    }
    const auto clouds = iterate_attractor(example2(), 4, 0.0);
    CHECK(directed_hausdorff(clouds[0].points, clouds[1].points) ==
          serial::directed_hausdorff(clouds[0].points, clouds[1].points));
}

}
