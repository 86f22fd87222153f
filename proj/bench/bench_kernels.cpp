// Parallel kernels against their serial references.

#include "gdfif/attractor.hpp"
#include "gdfif/funcspace.hpp"

#include <benchmark/benchmark.h>

namespace {

gdfif::GifsSystem example2() {
    const double t = 1.0 / 3.0;
    return gdfif::build_system(
        {gdfif::DataSet({{0, 5}, {1, 4}, {2, 1}, {3, 1}, {4, 4}, {5, 5}}),
         gdfif::DataSet({{0, 1}, {1, 2}, {2, 3}, {3, 2}, {4, 1}})},
        gdfif::WiringPlan::from_blocks({{{0, {t, t, t}}, {1, {t, t}}}, {{0, {t}}, {1, {t, t, t}}}}));
}

const gdfif::GifsSystem& system() {
    static const gdfif::GifsSystem sys = example2();
    return sys;
}

void BM_ApplyT(benchmark::State& state) {
    const auto res = static_cast<std::size_t>(state.range(0));
    const auto family = gdfif::initial_family(system(), res);
    for (auto _ : state) benchmark::DoNotOptimize(gdfif::apply_T(system(), family, res));
}

void BM_ApplyTSerial(benchmark::State& state) {
    const auto res = static_cast<std::size_t>(state.range(0));
    const auto family = gdfif::initial_family(system(), res);
    for (auto _ : state) benchmark::DoNotOptimize(gdfif::serial::apply_T(system(), family, res));
}

gdfif::CloudFamily clouds_at(int generations) {
    return gdfif::iterate_attractor(system(), static_cast<std::size_t>(generations), 0.0);
}

void BM_Hutchinson(benchmark::State& state) {
    const auto clouds = clouds_at(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gdfif::hutchinson_step(system(), clouds));
}

void BM_HutchinsonSerial(benchmark::State& state) {
    const auto clouds = clouds_at(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gdfif::serial::hutchinson_step(system(), clouds));
}

void BM_Hausdorff(benchmark::State& state) {
    const auto clouds = clouds_at(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gdfif::directed_hausdorff(clouds[0].points, clouds[1].points));
}

void BM_HausdorffSerial(benchmark::State& state) {
    const auto clouds = clouds_at(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gdfif::serial::directed_hausdorff(clouds[0].points, clouds[1].points));
}

}  // namespace

BENCHMARK(BM_ApplyT)->Arg(64)->Arg(1024)->Arg(16384);
BENCHMARK(BM_ApplyTSerial)->Arg(64)->Arg(1024)->Arg(16384);
BENCHMARK(BM_Hutchinson)->Arg(4)->Arg(6);
BENCHMARK(BM_HutchinsonSerial)->Arg(4)->Arg(6);
BENCHMARK(BM_Hausdorff)->Arg(3)->Arg(4);
BENCHMARK(BM_HausdorffSerial)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
