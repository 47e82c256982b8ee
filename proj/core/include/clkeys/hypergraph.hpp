#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "clkeys/set_family.hpp"
#include "clkeys/universe.hpp"

namespace clkeys {

inline constexpr std::size_t kBruteForceTransversalLimit = 20;

/// Hypergraph over a vertex universe. Edges keep the order in which they
/// were supplied (duplicates dropped), since the inductive transversal
/// construction visits them in that order. Empty edges and an empty edge
/// list are both allowed.
class Hypergraph {
 public:
  explicit Hypergraph(Universe vertices);
  Hypergraph(Universe vertices, std::span<const AttrSet> edges);
  Hypergraph(Universe vertices, std::vector<Mask> edges);
  explicit Hypergraph(const SetFamily& edges);

  const Universe& vertices() const noexcept { return vertices_; }
  /// Edges in canonical order.
  SetFamily edges() const;
  /// Edges in processing order.
  std::span<const Mask> edge_sequence() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

 private:
  Universe vertices_;
  std::vector<Mask> edges_;
};

/// Counters for one inductive step, i.e. processing edge E_{q+1} against
/// the current level L_q.
struct TransversalStep {
  std::size_t q = 0;
  Mask edge = 0;
  std::size_t level_size = 0;     // l_q = |L_q|
  std::size_t disjoint = 0;       // t_q = members of L_q missing the edge
  std::size_t meeting = 0;        // |S_q|
  std::size_t cost_factor = 0;    // u_q = l_q - t_q, or 1 when l_q == t_q
  std::size_t candidates_generated = 0;
  std::size_t candidates_kept = 0;
  std::size_t next_level_size = 0;  // l_{q+1}
};

struct TransversalStats {
  std::size_t edges_input = 0;
  /// Edges left after dropping non-minimal ones.
  std::size_t edges_processed = 0;
  bool empty_edge = false;
  std::vector<TransversalStep> steps;
};

struct TransversalOptions {
  /// Keep a copy of every intermediate level L_1..L_m.
  bool record_levels = false;
};

struct TransversalResult {
  SetFamily transversals;
  TransversalStats stats;
  std::vector<SetFamily> levels;  // only filled with record_levels
};

/// True iff t meets every edge.
bool is_transversal(const Hypergraph& h, const AttrSet& t);

/// All minimal transversals, built edge by edge starting from L_0 = {∅}.
/// At each step the members missing the next edge are extended by each of
/// its vertices, and an extension is kept unless some member that already
/// meets the edge is contained in it.
TransversalResult min_transversals(const Hypergraph& h,
                                   const TransversalOptions& options = {});

/// Minimal transversals by exhaustive enumeration of all 2^n vertex sets.
/// Throws LimitExceeded when n > limit.
SetFamily brute_force_transversals(
    const Hypergraph& h, std::size_t limit = kBruteForceTransversalLimit);

/// Tr(family) treating the family as the edge set of a hypergraph.
SetFamily transversal_hypergraph(const SetFamily& edges);

}  // namespace clkeys
