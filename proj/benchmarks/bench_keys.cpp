#include <benchmark/benchmark.h>

#include "clkeys/keys.hpp"
#include "clkeys/reduction.hpp"
#include "support/generators.hpp"

namespace {

using namespace clkeys;

std::vector<ClosureOperation> sample_systems(std::size_t n, int count) {
  testing::Rng rng(n * 104729);
  const Universe u = Universe::of_size(n);
  std::vector<ClosureOperation> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(system_to_closure(testing::random_closure_system(u, rng)));
  }
  return out;
}

void BM_MinKeysViaIndependentSets(benchmark::State& state) {
  const auto fs = sample_systems(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) {
    auto keys = min_keys(fs[i++ % fs.size()]);
    benchmark::DoNotOptimize(keys);
  }
}
BENCHMARK(BM_MinKeysViaIndependentSets)->DenseRange(4, 16, 4);

void BM_MinKeysBruteForce(benchmark::State& state) {
  const auto fs = sample_systems(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) {
    auto keys = brute_force_min_keys(fs[i++ % fs.size()]);
    benchmark::DoNotOptimize(keys);
  }
}
BENCHMARK(BM_MinKeysBruteForce)->DenseRange(4, 16, 4);

void BM_ExtractMinKey(benchmark::State& state) {
  const auto fs = sample_systems(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) {
    auto key = extract_min_key(fs[i++ % fs.size()]);
    benchmark::DoNotOptimize(key);
  }
}
BENCHMARK(BM_ExtractMinKey)->DenseRange(4, 16, 4);

// Antikeys of the graph reduction go through a full 2^n closed-set scan.
void BM_NonkeyDecisionOnCycle(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  const auto f = graph_to_closure(Graph(Universe::of_size(n), edges));
  for (auto _ : state) {
    auto answer = nonkey_decision(f, n / 2);
    benchmark::DoNotOptimize(answer);
  }
}
BENCHMARK(BM_NonkeyDecisionOnCycle)->DenseRange(6, 18, 4);

}  // namespace
