#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "clkeys/set_family.hpp"
#include "clkeys/universe.hpp"

namespace clkeys {

inline constexpr std::size_t kDefaultEnumerationLimit = 20;
inline constexpr std::size_t kAxiomCheckLimit = 12;

class ClosureOperation;

/// Family of subsets containing U and closed under intersection.
class ClosureSystem {
 public:
  /// Throws InvalidInput if the family fails validate_system.
  explicit ClosureSystem(SetFamily closed_sets);

  const Universe& universe() const noexcept { return closed_.universe(); }
  const SetFamily& closed_sets() const noexcept { return closed_; }

  friend bool operator==(const ClosureSystem&, const ClosureSystem&) = default;

 private:
  struct Unchecked {};
  ClosureSystem(SetFamily closed_sets, Unchecked) noexcept
      : closed_(std::move(closed_sets)) {}
  friend ClosureSystem intersection_closure(const SetFamily&);
  friend class ClosureOperation;
  friend ClosureSystem closed_sets(const ClosureOperation&, std::size_t);

  SetFamily closed_;
};

struct MaximalMap {};
struct IdentityMap {};
struct TranslationMap {
  Mask base = 0;
};
struct PointMap {
  std::size_t element = 0;
};
struct SystemMap {
  SetFamily closed;
};
struct Implication {
  Mask lhs = 0;
  Mask rhs = 0;
};
struct ImplicationMap {
  std::vector<Implication> rules;
};
/// Arbitrary set map. Not guaranteed to be a closure; run verify_axioms.
struct FunctionMap {
  std::function<Mask(Mask)> map;
  std::string label;
};

using ClosureRepresentation =
    std::variant<SystemMap, ImplicationMap, MaximalMap, IdentityMap,
                 TranslationMap, PointMap, FunctionMap>;

/// A map X -> f(X) on subsets of a universe, held in one of several
/// interchangeable representations.
class ClosureOperation {
 public:
  static ClosureOperation maximal(Universe u);
  static ClosureOperation identity(Universe u);
  /// t_M(X) = M ∪ X.
  static ClosureOperation translation(const AttrSet& base);
  /// f_a(X) = U if a ∈ X, X otherwise.
  static ClosureOperation point(Universe u, std::size_t element);
  static ClosureOperation point(Universe u, std::string_view element);
  /// f(X) = ∩{Y ∈ S : X ⊆ Y}.
  static ClosureOperation from_system(const ClosureSystem& system);
  /// Least superset of X closed under every rule lhs ⊆ X ⇒ rhs ⊆ X.
  static ClosureOperation implications(Universe u,
                                       std::vector<Implication> rules);
  static ClosureOperation from_function(Universe u,
                                        std::function<Mask(Mask)> map,
                                        std::string label = "function");

  const Universe& universe() const noexcept { return universe_; }
  const ClosureRepresentation& representation() const noexcept { return rep_; }
  /// One of "system", "implications", "maximal", "identity", "translation",
  /// "point", "function".
  std::string kind_name() const;
  /// False only for FunctionMap.
  bool is_known_closure() const noexcept;

  /// Throws UniverseMismatch for a set from another universe.
  AttrSet evaluate(const AttrSet& x) const;
  /// Unchecked fast path; x must lie within the universe.
  Mask evaluate(Mask x) const;

 private:
  ClosureOperation(Universe u, ClosureRepresentation rep)
      : universe_(std::move(u)), rep_(std::move(rep)) {}

  Universe universe_;
  ClosureRepresentation rep_;
};

// closure system checks

struct SystemReport {
  bool contains_universe = false;
  /// First pair (in canonical order) whose intersection is missing.
  std::optional<std::pair<AttrSet, AttrSet>> missing_intersection;
  std::size_t missing_count = 0;

  bool valid() const noexcept {
    return contains_universe && !missing_intersection;
  }
};

/// Checks U membership and closure under pairwise intersection, which on a
/// finite ground set is equivalent to closure under arbitrary nonempty
/// intersections.
SystemReport validate_system(const SetFamily& family);

/// Smallest closure system containing the family.
ClosureSystem intersection_closure(const SetFamily& family);

/// {X : f(X) = X}. Explicit systems are returned directly; other
/// representations are enumerated and throw LimitExceeded when the number
/// of free elements exceeds limit.
ClosureSystem closed_sets(const ClosureOperation& f,
                          std::size_t limit = kDefaultEnumerationLimit);

ClosureOperation system_to_closure(const ClosureSystem& system);

// axiom checks

enum class Axiom {
  Extensive,   // X ⊆ f(X)
  Monotone,    // X ⊆ Y ⇒ f(X) ⊆ f(Y)
  Idempotent,  // f(f(X)) = f(X)
};

/// "C1", "C2" or "C3".
const char* axiom_label(Axiom axiom) noexcept;

struct AxiomViolation {
  Axiom axiom;
  AttrSet x;
  AttrSet fx;
  std::optional<AttrSet> y;   // second set of a monotonicity witness pair
  std::optional<AttrSet> fy;  // f(y), or f(f(x)) for idempotence
  std::size_t occurrences = 0;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;  // at most one per axiom
  std::size_t sets_checked = 0;
  std::size_t pairs_checked = 0;

  bool ok() const noexcept { return violations.empty(); }
  bool violates(Axiom axiom) const noexcept;
};

/// Exhaustively checks the three closure axioms over all 2^n sets and 3^n
/// comparable pairs. Throws LimitExceeded when n > limit.
AxiomReport verify_axioms(const ClosureOperation& f,
                          std::size_t limit = kAxiomCheckLimit);

}  // namespace clkeys
