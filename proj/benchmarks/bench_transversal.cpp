#include <benchmark/benchmark.h>

#include "clkeys/hypergraph.hpp"
#include "support/generators.hpp"

namespace {

using namespace clkeys;

std::vector<SetFamily> sample_hypergraphs(std::size_t n, int count) {
  testing::Rng rng(n * 7919);
  const Universe u = Universe::of_size(n);
  std::vector<SetFamily> out;
  for (int i = 0; i < count; ++i) out.push_back(testing::random_simple_hypergraph(u, rng));
  return out;
}

void BM_MinTransversals(benchmark::State& state) {
  const auto inputs = sample_hypergraphs(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    auto res = min_transversals(Hypergraph(inputs[i++ % inputs.size()]));
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_MinTransversals)->DenseRange(6, 18, 4);

void BM_BruteForceTransversals(benchmark::State& state) {
  const auto inputs = sample_hypergraphs(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    auto res = brute_force_transversals(Hypergraph(inputs[i++ % inputs.size()]));
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_BruteForceTransversals)->DenseRange(6, 18, 4);

// Tr of the 2-uniform complete graph: the level sizes grow steadily.
void BM_MinTransversalsCompleteGraph(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Universe u = Universe::of_size(n);
  std::vector<Mask> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) edges.push_back(bit(a) | bit(b));
  }
  const Hypergraph h(u, edges);
  for (auto _ : state) {
    auto res = min_transversals(h);
    benchmark::DoNotOptimize(res);
  }
  state.counters["edges"] = static_cast<double>(edges.size());
}
BENCHMARK(BM_MinTransversalsCompleteGraph)->RangeMultiplier(2)->Range(4, 32);

}  // namespace
