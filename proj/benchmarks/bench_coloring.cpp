#include <benchmark/benchmark.h>

#include <map>

#include "trichrome/base_coloring.hpp"
#include "trichrome/composite.hpp"
#include "trichrome/generators.hpp"
#include "trichrome/triangles.hpp"

namespace {

using namespace trichrome;

const Graph& process_graph(std::uint64_t n)
{
    static std::map<std::uint64_t, Graph> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, gen_triangle_free_process(n, 1).graph).first;
    return it->second;
}

void BM_Algorithm(benchmark::State& state, AlgorithmId id)
{
    const Graph& g = process_graph(static_cast<std::uint64_t>(state.range(0)));
    std::size_t colors = 0;
    for (auto _ : state)
        colors = run_algorithm(id, g, 1).coloring.colors_used;
    state.counters["colors"] = static_cast<double>(colors);
}

BENCHMARK_CAPTURE(BM_Algorithm, prop0, AlgorithmId::prop0)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Algorithm, ttprop2, AlgorithmId::ttprop2)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Algorithm, prop0a, AlgorithmId::prop0a)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Algorithm, ttprop3, AlgorithmId::ttprop3)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Algorithm, twprop1, AlgorithmId::twprop1)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Algorithm, hybrid_n, AlgorithmId::hybrid_n)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Algorithm, hybrid_m, AlgorithmId::hybrid_m)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Algorithm, conjectural, AlgorithmId::conjectural)
    ->Arg(512)
    ->Arg(2048)
    ->Unit(benchmark::kMillisecond);

void BM_BaseStrategy(benchmark::State& state)
{
    const Graph g = gen_gnp(400, 0.1, 3).graph;
    BaseColoringOptions options;
    options.strategy = state.range(0) == 0 ? BaseStrategy::greedy_degeneracy : BaseStrategy::iterated_sparsify;
    std::size_t colors = 0;
    for (auto _ : state)
        colors = color_bounded_triangles(g, count_triangles(g).clamped_local_bound(), options, 1).colors_used;
    state.counters["colors"] = static_cast<double>(colors);
}
BENCHMARK(BM_BaseStrategy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
