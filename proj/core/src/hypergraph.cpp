#include "clkeys/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

#include "clkeys/error.hpp"

namespace clkeys {

namespace {

std::vector<Mask> dedup_preserving_order(std::vector<Mask> edges) {
  std::unordered_set<Mask> seen;
  std::vector<Mask> out;
  out.reserve(edges.size());
  for (Mask e : edges) {
    if (seen.insert(e).second) out.push_back(e);
  }
  return out;
}

// Drops every edge that strictly contains another edge, keeping order.
std::vector<Mask> minimal_edges_in_order(std::span<const Mask> edges) {
  std::vector<Mask> out;
  out.reserve(edges.size());
  for (Mask e : edges) {
    bool dominated = std::any_of(edges.begin(), edges.end(), [e](Mask other) {
      return is_proper_subset(other, e);
    });
    if (!dominated) out.push_back(e);
  }
  return out;
}

}  // namespace

Hypergraph::Hypergraph(Universe vertices) : vertices_(std::move(vertices)) {}

Hypergraph::Hypergraph(Universe vertices, std::span<const AttrSet> edges)
    : vertices_(std::move(vertices)) {
  std::vector<Mask> bits;
  bits.reserve(edges.size());
  for (const auto& e : edges) {
    require_same_universe(vertices_, e.universe());
    bits.push_back(e.bits());
  }
  edges_ = dedup_preserving_order(std::move(bits));
}

Hypergraph::Hypergraph(Universe vertices, std::vector<Mask> edges)
    : vertices_(std::move(vertices)) {
  for (Mask e : edges) {
    if (!is_subset(e, vertices_.mask())) {
      throw InvalidInput("edge has vertices outside the vertex set");
    }
  }
  edges_ = dedup_preserving_order(std::move(edges));
}

Hypergraph::Hypergraph(const SetFamily& edges)
    : vertices_(edges.universe()),
      edges_(edges.masks().begin(), edges.masks().end()) {}

SetFamily Hypergraph::edges() const { return SetFamily(vertices_, edges_); }

bool is_transversal(const Hypergraph& h, const AttrSet& t) {
  require_same_universe(h.vertices(), t.universe());
  const Mask bits = t.bits();
  return std::all_of(h.edge_sequence().begin(), h.edge_sequence().end(),
                     [bits](Mask e) { return (e & bits) != 0; });
}

TransversalResult min_transversals(const Hypergraph& h,
                                   const TransversalOptions& options) {
  TransversalStats stats;
  stats.edges_input = h.edge_count();

  const auto& seq = h.edge_sequence();
  if (std::find(seq.begin(), seq.end(), Mask{0}) != seq.end()) {
    stats.empty_edge = true;
    return {SetFamily(h.vertices()), std::move(stats), {}};
  }

  const std::vector<Mask> edges = minimal_edges_in_order(seq);
  stats.edges_processed = edges.size();

  std::vector<SetFamily> levels;
  std::vector<Mask> level{0};  // L_0 = {∅}
  std::vector<Mask> meeting;
  std::vector<Mask> disjoint;
  std::vector<Mask> next;

  for (std::size_t q = 0; q < edges.size(); ++q) {
    const Mask edge = edges[q];
    meeting.clear();
    disjoint.clear();
    for (Mask a : level) ((a & edge) != 0 ? meeting : disjoint).push_back(a);

    TransversalStep step;
    step.q = q;
    step.edge = edge;
    step.level_size = level.size();
    step.disjoint = disjoint.size();
    step.meeting = meeting.size();
    step.cost_factor =
        step.level_size > step.disjoint ? step.level_size - step.disjoint : 1;

    next = meeting;
    for (Mask b : disjoint) {
      for (Mask rest = edge; rest != 0; rest &= rest - 1) {
        const Mask candidate = b | (rest & -rest);
        ++step.candidates_generated;
        bool covered = std::any_of(meeting.begin(), meeting.end(),
                                   [candidate](Mask a) {
                                     return is_subset(a, candidate);
                                   });
        if (!covered) {
          next.push_back(candidate);
          ++step.candidates_kept;
        }
      }
    }
    masks::canonicalize(next);

    // Extensions of distinct disjoint members never compare, so every level
    // stays an antichain. Checked rather than assumed.
    if (!masks::is_antichain(next)) {
      throw InternalError("transversal level " + std::to_string(q + 1) +
                          " is not a simple hypergraph");
    }

    level.swap(next);
    step.next_level_size = level.size();
    stats.steps.push_back(step);
    if (options.record_levels) {
      levels.push_back(family_from_canonical(h.vertices(), level));
    }
  }

  return {family_from_canonical(h.vertices(), std::move(level)),
          std::move(stats), std::move(levels)};
}

SetFamily brute_force_transversals(const Hypergraph& h, std::size_t limit) {
  const std::size_t n = h.vertices().size();
  if (n > limit) throw LimitExceeded("brute-force transversals", n, limit);
  const auto& seq = h.edge_sequence();
  std::vector<Mask> hits;
  const Mask all = h.vertices().mask();
  for (Mask t = 0;; ++t) {
    bool ok = std::all_of(seq.begin(), seq.end(),
                          [t](Mask e) { return (e & t) != 0; });
    if (ok) hits.push_back(t);
    if (t == all) break;
  }
  return family_from_canonical(h.vertices(), masks::minimal(hits));
}

SetFamily transversal_hypergraph(const SetFamily& edges) {
  return min_transversals(Hypergraph(edges)).transversals;
}

}  // namespace clkeys
