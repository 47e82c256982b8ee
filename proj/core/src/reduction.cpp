#include "clkeys/reduction.hpp"

#include <algorithm>

#include "clkeys/error.hpp"
#include "clkeys/keys.hpp"

namespace clkeys {

namespace {

void require_cardinality(const Universe& u, std::size_t k) {
  if (k > u.size()) {
    throw InvalidInput("cardinality bound " + std::to_string(k) +
                       " exceeds universe size " + std::to_string(u.size()));
  }
}

}  // namespace

Graph::Graph(Universe vertices) : vertices_(std::move(vertices)) {}

Graph::Graph(Universe vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const std::size_t n = vertices_.size();
  for (auto& [u, v] : edges_) {
    if (u >= n || v >= n) throw InvalidInput("edge endpoint out of range");
    if (u == v) {
      throw InvalidInput("self-loop on '" + vertices_.name(u) +
                         "': edges need two distinct endpoints");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

SetFamily Graph::edge_family() const {
  std::vector<Mask> out;
  out.reserve(edges_.size());
  for (auto [u, v] : edges_) out.push_back(bit(u) | bit(v));
  return SetFamily(vertices_, std::move(out));
}

ClosureOperation graph_to_closure(const Graph& g) {
  std::vector<Implication> rules;
  rules.reserve(g.edges().size());
  const Mask all = g.vertices().mask();
  for (auto [u, v] : g.edges()) rules.push_back({bit(u) | bit(v), all});
  return ClosureOperation::implications(g.vertices(), std::move(rules));
}

bool is_graph_independent(const Graph& g, const AttrSet& x) {
  require_same_universe(g.vertices(), x.universe());
  return std::none_of(g.edges().begin(), g.edges().end(), [&x](Edge e) {
    return x.contains(e.first) && x.contains(e.second);
  });
}

NonkeyAnswer nonkey_decision(const ClosureOperation& f, std::size_t k,
                             std::size_t limit) {
  require_cardinality(f.universe(), k);
  const SetFamily anti = antikeys(f, limit);
  for (Mask a : anti.masks()) {
    if (popcount(a) >= k) return {true, f.universe().from_mask(a)};
  }
  return {};
}

NonkeyAnswer brute_force_nonkey_decision(const ClosureOperation& f,
                                         std::size_t k, std::size_t limit) {
  const Universe& u = f.universe();
  require_cardinality(u, k);
  if (u.size() > limit) {
    throw LimitExceeded("brute-force nonkey search", u.size(), limit);
  }
  const Mask all = u.mask();
  for (Mask x = 0;; ++x) {
    if (popcount(x) >= k && f.evaluate(x) != all) return {true, u.from_mask(x)};
    if (x == all) break;
  }
  return {};
}

}  // namespace clkeys
