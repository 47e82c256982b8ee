#include "clkeys/set_family.hpp"

#include <algorithm>
#include <sstream>

#include "clkeys/error.hpp"

namespace clkeys {

namespace masks {

void canonicalize(std::vector<Mask>& members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

// Processing in order of decreasing cardinality, a set is maximal iff it is
// not a proper subset of an already accepted maximal set: any larger
// non-maximal superset is itself below some accepted maximal one.
std::vector<Mask> maximal(std::span<const Mask> members) {
  std::vector<Mask> order(members.begin(), members.end());
  canonicalize(order);
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) {
    return popcount(a) > popcount(b);
  });
  std::vector<Mask> kept;
  for (Mask m : order) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [m](Mask k) {
      return is_proper_subset(m, k);
    });
    if (!dominated) kept.push_back(m);
  }
  canonicalize(kept);
  return kept;
}

std::vector<Mask> minimal(std::span<const Mask> members) {
  std::vector<Mask> order(members.begin(), members.end());
  canonicalize(order);
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) {
    return popcount(a) < popcount(b);
  });
  std::vector<Mask> kept;
  for (Mask m : order) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [m](Mask k) {
      return is_proper_subset(k, m);
    });
    if (!dominated) kept.push_back(m);
  }
  canonicalize(kept);
  return kept;
}

bool is_antichain(std::span<const Mask> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i != j && is_proper_subset(members[i], members[j])) return false;
    }
  }
  return true;
}

}  // namespace masks

SetFamily::SetFamily(Universe universe) : universe_(std::move(universe)) {}

SetFamily::SetFamily(Universe universe, std::vector<Mask> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  const Mask all = universe_.mask();
  for (Mask m : members_) {
    if (!is_subset(m, all)) {
      throw InvalidInput("family member has elements outside its universe");
    }
  }
  masks::canonicalize(members_);
}

SetFamily::SetFamily(Universe universe, std::span<const AttrSet> members)
    : universe_(std::move(universe)) {
  members_.reserve(members.size());
  for (const auto& s : members) {
    require_same_universe(universe_, s.universe());
    members_.push_back(s.bits());
  }
  masks::canonicalize(members_);
}

SetFamily SetFamily::of(
    const Universe& universe,
    std::initializer_list<std::initializer_list<std::string_view>> members) {
  std::vector<Mask> bits;
  bits.reserve(members.size());
  for (auto names : members) bits.push_back(universe.set_of(names).bits());
  return SetFamily(universe, std::move(bits));
}

AttrSet SetFamily::operator[](std::size_t i) const {
  if (i >= members_.size()) throw InvalidInput("family index out of range");
  return universe_.from_mask(members_[i]);
}

std::vector<AttrSet> SetFamily::sets() const {
  std::vector<AttrSet> out;
  out.reserve(members_.size());
  for (Mask m : members_) out.push_back(universe_.from_mask(m));
  return out;
}

bool SetFamily::contains(Mask bits) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), bits);
}

bool SetFamily::contains(const AttrSet& set) const {
  require_same_universe(universe_, set.universe());
  return contains(set.bits());
}

SetFamily SetFamily::with(const AttrSet& set) const {
  require_same_universe(universe_, set.universe());
  if (contains(set.bits())) return *this;
  std::vector<Mask> out = members_;
  out.insert(std::lower_bound(out.begin(), out.end(), set.bits()), set.bits());
  return SetFamily(universe_, std::move(out), Canonical{});
}

SetFamily SetFamily::without(const AttrSet& set) const {
  require_same_universe(universe_, set.universe());
  std::vector<Mask> out = members_;
  auto it = std::lower_bound(out.begin(), out.end(), set.bits());
  if (it != out.end() && *it == set.bits()) out.erase(it);
  return SetFamily(universe_, std::move(out), Canonical{});
}

std::string SetFamily::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) os << ',';
    os << universe_.from_mask(members_[i]).to_string();
  }
  os << '}';
  return os.str();
}

SetFamily family_from_canonical(Universe universe, std::vector<Mask> members) {
  return SetFamily(std::move(universe), std::move(members),
                   SetFamily::Canonical{});
}

SetFamily complement_family(const SetFamily& family) {
  const Mask all = family.universe().mask();
  std::vector<Mask> out;
  out.reserve(family.size());
  for (Mask m : family.masks()) out.push_back(all & ~m);
  masks::canonicalize(out);
  return family_from_canonical(family.universe(), std::move(out));
}

SetFamily maximal_sets(const SetFamily& family) {
  return family_from_canonical(family.universe(), masks::maximal(family.masks()));
}

SetFamily minimal_sets(const SetFamily& family) {
  return family_from_canonical(family.universe(), masks::minimal(family.masks()));
}

bool is_simple(const SetFamily& family) {
  return masks::is_antichain(family.masks());
}

AttrSet union_of(const SetFamily& family) {
  Mask acc = 0;
  for (Mask m : family.masks()) acc |= m;
  return family.universe().from_mask(acc);
}

AttrSet intersection_of(const SetFamily& family) {
  Mask acc = family.universe().mask();
  for (Mask m : family.masks()) acc &= m;
  return family.universe().from_mask(acc);
}

}  // namespace clkeys
