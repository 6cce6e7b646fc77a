#include <benchmark/benchmark.h>

#include "trichrome/generators.hpp"
#include "trichrome/graph.hpp"
#include "trichrome/triangles.hpp"

namespace {

using namespace trichrome;

void BM_CountTrianglesGnp(benchmark::State& state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const Graph g = gen_gnp(n, 0.1, 1).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(count_triangles(g).total);
    state.counters["m"] = static_cast<double>(g.num_edges());
    state.SetComplexityN(static_cast<std::int64_t>(g.num_edges()));
}
BENCHMARK(BM_CountTrianglesGnp)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

void BM_CountTrianglesBlowUp(benchmark::State& state)
{
    const auto i = static_cast<std::uint64_t>(state.range(0));
    const Graph g = blow_up(gen_triangle_free_process(200, 1).graph, i).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(count_triangles(g).total);
    state.counters["n"] = static_cast<double>(g.num_vertices());
}
BENCHMARK(BM_CountTrianglesBlowUp)->DenseRange(1, 6);

void BM_Degeneracy(benchmark::State& state)
{
    const Graph g = gen_triangle_free_process(static_cast<std::uint64_t>(state.range(0)), 1).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(degeneracy_order(g).degeneracy);
}
BENCHMARK(BM_Degeneracy)->RangeMultiplier(2)->Range(256, 4096);

void BM_TriangleFreeProcess(benchmark::State& state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(gen_triangle_free_process(n, ++seed).graph.num_edges());
}
BENCHMARK(BM_TriangleFreeProcess)->RangeMultiplier(2)->Range(256, 2048)->Unit(benchmark::kMillisecond);

}  // namespace
