#include <benchmark/benchmark.h>

#include <random>

#include "orbitfin/gallery.hpp"
#include "orbitfin/verify.hpp"

using namespace orbitfin;

namespace {

SampledStructure sample_of(const DefStructure& d, int atoms) { return sample(d, make_sample(d.base(), atoms)); }

void BM_FindHomXToY(benchmark::State& state) {
    const int atoms = static_cast<int>(state.range(0));
    const SampledStructure x = sample_of(gallery::build_X(), atoms);
    const SampledStructure y = sample_of(gallery::build_Y().total, atoms);
    for (auto _ : state) benchmark::DoNotOptimize(find_hom(x.structure, y.structure));
    state.counters["points"] = static_cast<double>(x.size());
}
BENCHMARK(BM_FindHomXToY)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_JohnsonEndos(benchmark::State& state) {
    const SampledStructure j = sample_of(gallery::johnson(), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_endos(j.structure));
}
BENCHMARK(BM_JohnsonEndos)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SpiderCore(benchmark::State& state) {
    const FinStructure s = gallery::build_spider(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(compute_core(s));
}
BENCHMARK(BM_SpiderCore)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
    std::mt19937_64 rng(0);
    std::vector<FinStructure> pool;
    while (pool.size() < 16) {
        FinStructure s = verify::random_structure(rng, static_cast<int>(state.range(0)));
        if (s.size() == state.range(0)) pool.push_back(std::move(s));
    }
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(pool[i++ % pool.size()]));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
