#include <benchmark/benchmark.h>

#include "pappus/analysis.hpp"
#include "pappus/dual_pipeline.hpp"
#include "pappus/scene.hpp"

namespace {

using namespace pappus;

void BM_SymbolicScene(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_scene());
}
BENCHMARK(BM_SymbolicScene)->Unit(benchmark::kMillisecond);

void BM_SymbolicRoundTrip(benchmark::State& state) {
  const PappusScene scene = symbolic_scene();
  for (auto _ : state) benchmark::DoNotOptimize(run_round_trip(scene));
}
BENCHMARK(BM_SymbolicRoundTrip)->Unit(benchmark::kMillisecond);

void BM_SymbolicCrossRatioTable(benchmark::State& state) {
  const PappusScene scene = symbolic_scene();
  for (auto _ : state) benchmark::DoNotOptimize(cross_ratio_table(scene));
}
BENCHMARK(BM_SymbolicCrossRatioTable)->Unit(benchmark::kMillisecond);

void BM_RatFuncMultiply(benchmark::State& state) {
  const RatFunc a = RatFunc::var_a(), b = RatFunc::var_b();
  const RatFunc f = (a * b - RatFunc(1)) / (a + b), g = (a - b * b) / (a * b + RatFunc(2));
  for (auto _ : state) benchmark::DoNotOptimize(f * g + g);
}
BENCHMARK(BM_RatFuncMultiply);

}  // namespace
