#include <benchmark/benchmark.h>

#include "pappus/analysis.hpp"
#include "pappus/dual_pipeline.hpp"
#include "pappus/sampling.hpp"
#include "pappus/scene.hpp"

namespace {

using namespace pappus;

void BM_RationalScene(benchmark::State& state) {
  const auto pairs = sample_nondegenerate(1, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& p = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(canonical_scene(p.a, p.b));
  }
}
BENCHMARK(BM_RationalScene)->Unit(benchmark::kMicrosecond);

void BM_RationalRoundTrip(benchmark::State& state) {
  const auto pairs = sample_nondegenerate(2, 64);
  std::vector<PappusScene> scenes;
  for (const auto& p : pairs) scenes.push_back(canonical_scene(p.a, p.b));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_round_trip(scenes[i++ % scenes.size()]));
}
BENCHMARK(BM_RationalRoundTrip)->Unit(benchmark::kMicrosecond);

void BM_SuperReport(benchmark::State& state) {
  const auto pairs = sample_nondegenerate(3, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& p = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(super_report(p.a, p.b));
  }
}
BENCHMARK(BM_SuperReport)->Unit(benchmark::kMicrosecond);

void BM_PairsTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(s_pairs_table());
}
BENCHMARK(BM_PairsTable)->Unit(benchmark::kMicrosecond);

}  // namespace
