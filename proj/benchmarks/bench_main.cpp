#include <benchmark/benchmark.h>

#include "regtrace/regtrace.hpp"

namespace {

using namespace regtrace;

void BM_ClosedPaths(benchmark::State& state) {
  const Graph g = generate(PetersenSpec{});
  for (auto _ : state) benchmark::DoNotOptimize(count_closed_paths(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClosedPaths)->Arg(12)->Arg(24)->Arg(48);

void BM_GeodesicPaths(benchmark::State& state) {
  const Graph g = generate(PetersenSpec{});
  for (auto _ : state) benchmark::DoNotOptimize(count_geodesic_paths(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GeodesicPaths)->Arg(12)->Arg(24)->Arg(48);

void BM_TreeWalks(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tree_walk_counts(3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TreeWalks)->Arg(24)->Arg(64);

void BM_MasterIdentity(benchmark::State& state) {
  const Graph g = generate(RandomRegularSpec{10, 3, 7});
  for (auto _ : state) benchmark::DoNotOptimize(master_identity(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MasterIdentity)->Arg(12)->Arg(24);

void BM_Spectrum(benchmark::State& state) {
  const Graph g = generate(RandomRegularSpec{static_cast<int>(state.range(0)), 3, 7});
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(g));
}
BENCHMARK(BM_Spectrum)->Arg(10)->Arg(40)->Arg(100);

void BM_HomotopyCensus(benchmark::State& state) {
  const Graph g = generate(CompleteSpec{4});
  for (auto _ : state) benchmark::DoNotOptimize(homotopy_census(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HomotopyCensus)->Arg(8)->Arg(10);

void BM_TraceFormula(benchmark::State& state) {
  const Graph g = generate(PetersenSpec{});
  for (auto _ : state) benchmark::DoNotOptimize(verify_trace_formula(g, 1.0, 24, 1e-8));
}
BENCHMARK(BM_TraceFormula);

}  // namespace
BENCHMARK_MAIN();
