#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clkeys/universe.hpp"

namespace clkeys {

/// Duplicate-free family of subsets of one Universe, kept in canonical
/// order (ascending bit pattern).
class SetFamily {
 public:
  explicit SetFamily(Universe universe);
  /// Deduplicates and sorts. Throws InvalidInput for out-of-range masks.
  SetFamily(Universe universe, std::vector<Mask> members);
  /// Throws UniverseMismatch if any set is bound to another universe.
  SetFamily(Universe universe, std::span<const AttrSet> members);

  /// Convenience for fixtures: SetFamily::of(u, {{"a","c"}, {"b"}}).
  static SetFamily of(
      const Universe& universe,
      std::initializer_list<std::initializer_list<std::string_view>> members);

  const Universe& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::span<const Mask> masks() const noexcept { return members_; }
  AttrSet operator[](std::size_t i) const;
  std::vector<AttrSet> sets() const;

  bool contains(Mask bits) const noexcept;
  bool contains(const AttrSet& set) const;

  SetFamily with(const AttrSet& set) const;
  SetFamily without(const AttrSet& set) const;

  /// "{{a,b},{c}}" rendering; the empty family is "{}" and {∅} is "{{}}".
  std::string to_string() const;

  friend bool operator==(const SetFamily& a, const SetFamily& b) noexcept {
    return a.members_ == b.members_ && a.universe_ == b.universe_;
  }

 private:
  struct Canonical {};
  SetFamily(Universe universe, std::vector<Mask> members, Canonical) noexcept
      : universe_(std::move(universe)), members_(std::move(members)) {}
  friend SetFamily family_from_canonical(Universe, std::vector<Mask>);

  Universe universe_;
  std::vector<Mask> members_;
};

/// Wraps members that are already sorted, unique and inside the universe.
/// No validation is performed.
SetFamily family_from_canonical(Universe universe, std::vector<Mask> members);

/// { U \ Y : Y in family }.
SetFamily complement_family(const SetFamily& family);

/// Members not strictly contained in any other member.
SetFamily maximal_sets(const SetFamily& family);

/// Members not strictly containing any other member.
SetFamily minimal_sets(const SetFamily& family);

/// True iff no two distinct members are comparable under inclusion.
bool is_simple(const SetFamily& family);

/// Union of all members; the empty set for the empty family.
AttrSet union_of(const SetFamily& family);

/// Intersection of all members; U for the empty family.
AttrSet intersection_of(const SetFamily& family);

namespace masks {

/// Sorts ascending and removes duplicates in place.
void canonicalize(std::vector<Mask>& members);

// The inputs need not be canonical; outputs are canonical.
std::vector<Mask> maximal(std::span<const Mask> members);
std::vector<Mask> minimal(std::span<const Mask> members);
bool is_antichain(std::span<const Mask> members);

}  // namespace masks

}  // namespace clkeys
