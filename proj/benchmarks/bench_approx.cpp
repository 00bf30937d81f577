#include <benchmark/benchmark.h>

#include "esbss/optimizer.hpp"
#include "esbss/oracle.hpp"
#include "esbss/strong_biconnectivity.hpp"
#include "esbss/testkit.hpp"

namespace {

using namespace esbss;

Digraph instance(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    return testkit::generate({n, 2 * n, 7});
}

void BM_Approx(benchmark::State& state) {
    const Digraph g = instance(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(approx_m2esbss(g));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Approx)->RangeMultiplier(2)->Range(16, 256)->Complexity()->Unit(benchmark::kMillisecond);

void BM_MinimalTwoEcss(benchmark::State& state) {
    const Digraph g = instance(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimal_two_ecss(g));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinimalTwoEcss)->RangeMultiplier(2)->Range(16, 256)->Complexity()->Unit(benchmark::kMillisecond);

void BM_Sbcs(benchmark::State& state) {
    const Digraph g = instance(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sbcs(g));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Sbcs)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_BBridges(benchmark::State& state) {
    const Digraph g = instance(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(b_bridges(g));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BBridges)->RangeMultiplier(2)->Range(16, 512)->Complexity()->Unit(benchmark::kMicrosecond);

void BM_TwoEdgeCheck(benchmark::State& state) {
    const Digraph g = instance(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_two_edge_strongly_biconnected(g));
    }
}
BENCHMARK(BM_TwoEdgeCheck)->RangeMultiplier(2)->Range(16, 512)->Unit(benchmark::kMicrosecond);

void BM_ExactFigure(benchmark::State& state) {
    const Digraph g = testkit::fig1(testkit::Fig1Variant::A).graph;
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::exact_m2esbss(g, 1'000'000));
    }
}
BENCHMARK(BM_ExactFigure)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
