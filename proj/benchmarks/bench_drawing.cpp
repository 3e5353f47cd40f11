#include <benchmark/benchmark.h>

#include "segdraw/generators.hpp"
#include "segdraw/metrics_verify.hpp"
#include "segdraw/monotone_completion.hpp"
#include "segdraw/tree_segments.hpp"

using namespace segdraw;

static void BM_DrawTree(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto t = gen_rooted_tree({Family::RandomTree, n, 7});
    for (auto _ : state) benchmark::DoNotOptimize(draw_tree(t, false));
    state.SetComplexityN(n);
}
BENCHMARK(BM_DrawTree)->RangeMultiplier(2)->Range(1 << 12, 1 << 17)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_DrawTreeWithReport(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto t = gen_rooted_tree({Family::RandomTree, n, 7});
    for (auto _ : state) benchmark::DoNotOptimize(draw_tree(t, true));
    state.SetComplexityN(n);
}
BENCHMARK(BM_DrawTreeWithReport)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_CountSegments(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto d = draw_tree(gen_rooted_tree({Family::RandomTree, n, 3}), false).drawing;
    for (auto _ : state) benchmark::DoNotOptimize(count_segments(d));
    state.SetComplexityN(n);
}
BENCHMARK(BM_CountSegments)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

static void BM_ThreeConnected(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PlaneGraph g = gen_stacked_triangulation({Family::StackedTriangulation, n, 1});
    for (auto _ : state) benchmark::DoNotOptimize(draw_three_connected(g, 0));
    state.SetComplexityN(n);
}
BENCHMARK(BM_ThreeConnected)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK_MAIN();
