#include <benchmark/benchmark.h>

#include "orbitfin/gallery.hpp"

using namespace orbitfin;

namespace {

void BM_SampleX(benchmark::State& state) {
    const DefStructure x = gallery::build_X();
    const AtomSample atoms = make_sample(x.base(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sample(x, atoms));
}
BENCHMARK(BM_SampleX)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_GrowthS2(benchmark::State& state) {
    const DefStructure s2 = gallery::build_S2();
    Limits limits;
    limits.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(unlabelled_growth(s2, static_cast<int>(state.range(0)), GrowthMode::Homogeneous, limits));
}
BENCHMARK(BM_GrowthS2)->Args({6, 1})->Args({8, 1})->Args({8, 2})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_GrowthQSTBase(benchmark::State& state) {
    const DefStructure q = gallery::build_QST();
    for (auto _ : state) benchmark::DoNotOptimize(unlabelled_growth(q, static_cast<int>(state.range(0)), GrowthMode::Base));
}
BENCHMARK(BM_GrowthQSTBase)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_PointOrbitsJord(benchmark::State& state) {
    const DefStructure j = gallery::jord(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(point_orbits(j, 2));
}
BENCHMARK(BM_PointOrbitsJord)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_InvariantOrders(benchmark::State& state) {
    const DefStructure j = gallery::jord(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_invariant_orders(j));
}
BENCHMARK(BM_InvariantOrders)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
