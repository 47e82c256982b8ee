#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clkeys/closure.hpp"
#include "clkeys/set_family.hpp"

namespace clkeys {

inline constexpr std::size_t kBruteForceNonkeyLimit = 8;

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph. Edges are stored with the smaller endpoint
/// first, sorted and duplicate-free.
class Graph {
 public:
  explicit Graph(Universe vertices);
  /// Throws InvalidInput for self-loops or out-of-range endpoints.
  /// Repeated edges collapse.
  Graph(Universe vertices, std::vector<Edge> edges);

  const Universe& vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  /// The edges as a 2-uniform family of vertex sets.
  SetFamily edge_family() const;

 private:
  Universe vertices_;
  std::vector<Edge> edges_;
};

/// Closure on U = V that sends every set containing an edge to V and
/// fixes every other set. Its minimal keys are exactly the edges (when
/// there is at least one), and its nonkeys are the independent sets of g.
ClosureOperation graph_to_closure(const Graph& g);

/// True iff x contains no edge.
bool is_graph_independent(const Graph& g, const AttrSet& x);

struct NonkeyAnswer {
  bool exists = false;
  std::optional<AttrSet> witness;
};

/// Is there a nonkey X with |X| >= k? Answered via Antikey(f): every nonkey
/// sits below some antikey. The witness is the first antikey, in canonical
/// order, that is large enough. Throws InvalidInput when k > n.
NonkeyAnswer nonkey_decision(const ClosureOperation& f, std::size_t k,
                             std::size_t limit = kDefaultEnumerationLimit);

/// Same question by scanning every subset; the witness is the first
/// qualifying subset in canonical order.
NonkeyAnswer brute_force_nonkey_decision(
    const ClosureOperation& f, std::size_t k,
    std::size_t limit = kBruteForceNonkeyLimit);

}  // namespace clkeys
