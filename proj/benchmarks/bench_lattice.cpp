#include <benchmark/benchmark.h>

#include "pappus/lattice.hpp"
#include "pappus/relabel.hpp"
#include "pappus/sampling.hpp"
#include "pappus/scene.hpp"

namespace {

using namespace pappus;

std::vector<HomTriple> joins_of(const PappusScene& s) {
  std::vector<HomTriple> out;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) out.push_back(s.join_line(i, j));
  return out;
}

void BM_JoinLattice(benchmark::State& state) {
  const auto lines = joins_of(canonical_scene(3, 5));
  for (auto _ : state) benchmark::DoNotOptimize(build_lattice(lines));
}
BENCHMARK(BM_JoinLattice)->Unit(benchmark::kMicrosecond);

void BM_ConfigurationLattice(benchmark::State& state) {
  const auto lines = configuration_lines(configuration_of(canonical_scene(3, 5)));
  for (auto _ : state) benchmark::DoNotOptimize(build_lattice(lines));
}
BENCHMARK(BM_ConfigurationLattice)->Unit(benchmark::kMicrosecond);

// Joins of several specializations together: n = 9 * k lines.
void BM_MixedLattice(benchmark::State& state) {
  std::vector<HomTriple> lines;
  for (const auto& p : sample_general(4, static_cast<std::size_t>(state.range(0)))) {
    for (auto& l : joins_of(canonical_scene(p.a, p.b))) {
      bool fresh = true;
      for (const auto& m : lines) fresh = fresh && !projectively_equal(l, m);
      if (fresh) lines.push_back(l);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(build_lattice(lines));
  state.counters["lines"] = static_cast<double>(lines.size());
}
BENCHMARK(BM_MixedLattice)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
