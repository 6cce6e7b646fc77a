#include <benchmark/benchmark.h>

#include "trichrome/generators.hpp"
#include "trichrome/independent_set.hpp"
#include "trichrome/oracles.hpp"

namespace {

using namespace trichrome;

void BM_ExactIndependentSet(benchmark::State& state)
{
    const Graph g = gen_gnp(static_cast<std::uint64_t>(state.range(0)), 0.3, 5).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_max_independent_set(g).members.size());
}
BENCHMARK(BM_ExactIndependentSet)->DenseRange(20, 40, 10);

void BM_ExactChromatic(benchmark::State& state)
{
    const Graph g = gen_gnp(static_cast<std::uint64_t>(state.range(0)), 0.4, 5).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_chromatic(g));
}
BENCHMARK(BM_ExactChromatic)->DenseRange(8, 16, 4);

void BM_FractionalChromatic(benchmark::State& state)
{
    const Graph g = gen_gnp(static_cast<std::uint64_t>(state.range(0)), 0.4, 5).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(fractional_chromatic(g).value.value());
}
BENCHMARK(BM_FractionalChromatic)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

}  // namespace
