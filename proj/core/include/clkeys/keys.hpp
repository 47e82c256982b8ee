#pragma once

#include <cstddef>
#include <span>

#include "clkeys/closure.hpp"
#include "clkeys/hypergraph.hpp"
#include "clkeys/set_family.hpp"

namespace clkeys {

inline constexpr std::size_t kBruteForceKeyLimit = 16;

/// I(X) = U \ f(X).
AttrSet independent_set(const ClosureOperation& f, const AttrSet& x);

/// I(f) = { U \ C : C ∈ Closed(f) }. Always contains ∅.
SetFamily independent_family(const ClosureSystem& closed);
SetFamily independent_family(const ClosureOperation& f,
                             std::size_t limit = kDefaultEnumerationLimit);

/// MI(f): the minimal nonempty members of I(f).
SetFamily minimal_independent_family(const ClosureSystem& closed);
SetFamily minimal_independent_family(
    const ClosureOperation& f, std::size_t limit = kDefaultEnumerationLimit);

/// f(K) = U.
bool is_key(const ClosureOperation& f, const AttrSet& k);

/// Starts from K = U and drops each element in turn, in the given order,
/// whenever the rest is still a key. Performs exactly n + 1 evaluations.
/// order must be a permutation of 0..n-1; throws InvalidInput otherwise.
AttrSet extract_min_key(const ClosureOperation& f,
                        std::span<const std::size_t> order);
/// Same, removing elements in universe order.
AttrSet extract_min_key(const ClosureOperation& f);

/// Key(f) = Tr(MI(f)).
SetFamily min_keys(const ClosureOperation& f,
                   std::size_t limit = kDefaultEnumerationLimit);

/// Antikey(f) = complement of MI(f).
SetFamily antikeys(const ClosureOperation& f,
                   std::size_t limit = kDefaultEnumerationLimit);

/// Minimal keys straight from the definition, over all 2^n subsets.
SetFamily brute_force_min_keys(const ClosureOperation& f,
                               std::size_t limit = kBruteForceKeyLimit);

/// Maximal nonkeys straight from the definition, over all 2^n subsets.
SetFamily brute_force_antikeys(const ClosureOperation& f,
                               std::size_t limit = kBruteForceKeyLimit);

struct KeyReport {
  SetFamily closed;
  SetFamily independent;
  SetFamily minimal_independent;
  SetFamily min_keys;
  SetFamily antikeys;
  TransversalStats transversal_stats;
};

/// Key(f) and Antikey(f) from a single Closed(f) enumeration.
KeyReport full_report(const ClosureOperation& f,
                      std::size_t limit = kDefaultEnumerationLimit);

}  // namespace clkeys
