#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "clkeys/closure.hpp"
#include "clkeys/reduction.hpp"
#include "clkeys/set_family.hpp"

namespace clkeys::testing {

using Rng = std::mt19937_64;

inline Mask random_subset(const Universe& u, Rng& rng, double p) {
  std::bernoulli_distribution coin(p);
  Mask m = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (coin(rng)) m |= bit(i);
  }
  return m;
}

/// Every family of subsets of u, as 2^(2^n) bit patterns over the subsets.
/// Only sensible for n <= 4.
template <class Fn>
void for_each_family(const Universe& u, Fn&& fn) {
  const std::size_t subsets = std::size_t{1} << u.size();
  const std::uint64_t families = std::uint64_t{1} << subsets;
  std::vector<Mask> members;
  for (std::uint64_t code = 0; code < families; ++code) {
    members.clear();
    for (std::size_t s = 0; s < subsets; ++s) {
      if (code >> s & 1U) members.push_back(s);
    }
    fn(SetFamily(u, members));
  }
}

/// All antichains of P(u), including the empty family and {∅}.
inline std::vector<SetFamily> all_antichains(const Universe& u) {
  std::vector<SetFamily> out;
  for_each_family(u, [&](const SetFamily& f) {
    if (is_simple(f)) out.push_back(f);
  });
  return out;
}

inline SetFamily random_simple_hypergraph(const Universe& u, Rng& rng) {
  std::uniform_int_distribution<int> count(0, 8);
  std::uniform_real_distribution<double> density(0.15, 0.7);
  const double p = density(rng);
  std::vector<Mask> edges;
  const int m = count(rng);
  for (int i = 0; i < m; ++i) edges.push_back(random_subset(u, rng, p));
  return minimal_sets(SetFamily(u, std::move(edges)));
}

/// Intersection closure of a handful of random generators.
inline ClosureSystem random_closure_system(const Universe& u, Rng& rng) {
  std::uniform_int_distribution<int> count(0, 7);
  std::uniform_real_distribution<double> density(0.2, 0.85);
  const double p = density(rng);
  std::vector<Mask> gens;
  const int m = count(rng);
  for (int i = 0; i < m; ++i) gens.push_back(random_subset(u, rng, p));
  return intersection_closure(SetFamily(u, std::move(gens)));
}

/// Random graph with at least one edge.
inline Graph random_graph(const Universe& u, Rng& rng) {
  std::uniform_real_distribution<double> density(0.1, 0.8);
  std::bernoulli_distribution coin(density(rng));
  const std::size_t n = u.size();
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  if (edges.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::size_t a = pick(rng);
    std::size_t b = (a + 1 + pick(rng) % (n - 1)) % n;
    edges.emplace_back(a, b);
  }
  return Graph(u, std::move(edges));
}

}  // namespace clkeys::testing
