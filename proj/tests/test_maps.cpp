#include "classic_fif_oracle.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <cmath>

using namespace gdfif;
using namespace gdfif::testing;

namespace {

void check_map(const AffineMap& m, double a, double c, double d, double e, double f) {
    CHECK(m.a == doctest::Approx(a).epsilon(1e-12));
    CHECK(m.c == doctest::Approx(c).epsilon(1e-12));
    CHECK(m.d == doctest::Approx(d).epsilon(1e-12));
    CHECK(m.e == doctest::Approx(e).epsilon(1e-12));
    CHECK(m.f == doctest::Approx(f).epsilon(1e-12));
}

}  // namespace

TEST_SUITE("maps") {

TEST_CASE("example 1 coefficients match the printed contractions") {
    const auto sys = example1();
    REQUIRE(sys.maps(0).size() == 3);
    check_map(sys.maps(0)[0], 0.3, 0.475, 0.25, 0.0, 0.0);
    check_map(sys.maps(0)[1], 0.3, -0.15, 0.5, 3.0, 5.0);
    check_map(sys.maps(0)[2], 0.4, -0.325, 0.25, 6.0, 4.0);
    CHECK(sys.contraction_factor() == 0.5);
}

TEST_CASE("example 2 map from D1 into the first interval of D2") {
    const auto sys = example2();
    const AffineMap& m = sys.maps(1)[0];
    CHECK(m.source == 0);
    CHECK(m.target == 1);
    CHECK(m.interval == 0);
    CHECK(std::abs(m.a - 0.2) < 1e-15);
    CHECK(std::abs(m.e - 0.0) < 1e-15);
    CHECK(std::abs(m.c - 0.2) < 1e-15);
    CHECK(std::abs(m.f + 2.0 / 3.0) < 1e-15);
    CHECK(std::abs(sys.contraction_factor() - 1.0 / 3.0) < 1e-15);
    CHECK(sys.pair_factor(0, 1) == doctest::Approx(1.0 / 3.0));
    CHECK(sys.max_horizontal_factor() == doctest::Approx(0.25));
}

TEST_CASE("flat data gives zero vertical coefficients") {
    const auto sys = flat();
    for (const auto& m : sys.maps(0)) {
        CHECK(m.c == 0.0);
        CHECK(m.f == 0.0);
        CHECK(m.a == 0.5);
    }
    CHECK(sys.maps(0)[0].e == 0.0);
    CHECK(sys.maps(0)[1].e == 1.0);
    CHECK(endpoint_residuals(sys) == 0.0);
}

TEST_CASE("apply_map") {
    const auto sys = example1();
    const AffineMap& w1 = sys.maps(0)[0];
    const Point hi = apply_map(w1, {10, 1});
    CHECK(hi.x == doctest::Approx(3.0));
    CHECK(hi.y == doctest::Approx(5.0));
    const Point lo = apply_map(w1, {0, 0});
    CHECK(lo.x == 0.0);
    CHECK(lo.y == 0.0);

    AffineMap identity;
    identity.a = 1;
    identity.d = 1;
    CHECK(apply_map(identity, {2.5, -7.25}) == Point{2.5, -7.25});
    CHECK(identity.pull_back(4.0) == 4.0);
}

TEST_CASE("endpoint residuals on the bundled examples") {
    CHECK(endpoint_residuals(example1()) <= 1e-12);
    CHECK(endpoint_residuals(example2()) <= 1e-12);
    CHECK(join_residuals(example2()) <= 1e-12);
}

TEST_CASE("invalid input is rejected with its report") {
    const std::vector<DataSet> data{DataSet({{0, 0}, {0.5, 1}, {1, 0}}), DataSet({{0, 0}, {2, 1}, {2.5, 0}})};
    const WiringPlan plan({{{0, 0.2}, {0, 0.2}}, {{0, 0.2}, {1, 0.2}}});
    try {
        (void)build_system(data, plan);
        FAIL("expected InvalidSystem");
    } catch (const InvalidSystem& e) {
        CHECK_FALSE(e.report().ok);
    }
    // The unchecked path still builds it (a = 2 for the offending map).
    const auto sys = build_system_unchecked(data, plan);
    CHECK(sys.maps(1)[0].a == doctest::Approx(2.0));
    CHECK_THROWS_AS(build_system_unchecked({DataSet({{0, 0}, {0, 1}, {1, 0}})}, WiringPlan({{{0, 0}, {0, 0}}})),
                    InvalidSystem);
}

TEST_CASE("random systems: endpoints, joins, strips, slopes") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const auto sys = random_two_vertex_system(rng, 0.999);
        CHECK(endpoint_residuals(sys) <= 1e-9);
        CHECK(join_residuals(sys) <= 1e-9);
        for (const auto& row : sys.maps()) {
            for (const auto& m : row) {
                CHECK(m.a > 0.0);
                CHECK(m.a < 1.0);
                CHECK(std::abs(m.d) < 1.0);
                const auto& src = sys.datasets()[m.source];
                const auto& dst = sys.datasets()[m.target];
                CHECK(std::abs(m(src.front()).x - dst[m.interval].x) <= 1e-12 * (1 + std::abs(dst[m.interval].x)));
                CHECK(std::abs(m(src.back()).x - dst[m.interval + 1].x) <= 1e-12 * (1 + std::abs(dst[m.interval + 1].x)));
            }
        }
    }
}

TEST_CASE("single self-sourced data set reproduces the classic coefficients") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto sys = random_single_system(rng);
        std::vector<double> d;
        for (const auto& a : sys.plan().row(0)) d.push_back(a.scale);
        const auto expected = classic::coefficients(sys.datasets()[0].points(), d);
        for (std::size_t i = 0; i < expected.size(); ++i) {
            const auto& m = sys.maps(0)[i];
            CHECK(std::abs(m.a - expected[i].a) <= 1e-12);
            CHECK(std::abs(m.c - expected[i].c) <= 1e-12);
            CHECK(std::abs(m.e - expected[i].e) <= 1e-12);
            CHECK(std::abs(m.f - expected[i].f) <= 1e-12);
        }
    }
}

}
