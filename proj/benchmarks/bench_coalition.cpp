#include "coalition/coalition.hpp"
#include "coalition/domination.hpp"
#include "coalition/generators.hpp"
#include "coalition/matrix_checks.hpp"

#include <benchmark/benchmark.h>

using namespace coalition;

// Cycles are "no" instances that fail at the first vertex; complete
// bipartite graphs are "yes" instances that scan every vertex.
static void BM_CheckNCycle(benchmark::State& state)
{
    const Graph g = gen::cycle(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(check_cc_equals_n(g).answer);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CheckNCycle)->RangeMultiplier(2)->Range(50, 400)->Complexity();

static void BM_CheckNBipartite(benchmark::State& state)
{
    const auto half = static_cast<std::size_t>(state.range(0) / 2);
    const Graph g = gen::complete_bipartite(half, half);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_cc_equals_n(g).answer);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CheckNBipartite)->RangeMultiplier(2)->Range(16, 128)->Complexity();

static void BM_CheckN1Cycle(benchmark::State& state)
{
    const Graph g = gen::cycle(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(check_cc_equals_n_minus_1(g, Variant::strict).answer);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CheckN1Cycle)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_CcNumberCycle(benchmark::State& state)
{
    const Graph g = gen::cycle(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(cc_number(g).cc);
}
BENCHMARK(BM_CcNumberCycle)->DenseRange(5, 10)->Unit(benchmark::kMillisecond);

static void BM_GammaCPath(benchmark::State& state)
{
    const Graph g = gen::path(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(gamma_c(g).size);
}
BENCHMARK(BM_GammaCPath)->DenseRange(8, 16, 4);

BENCHMARK_MAIN();
