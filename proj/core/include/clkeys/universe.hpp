#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clkeys {

/// Bit pattern of a subset; element index 0 is the least significant bit.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxUniverseSize = 64;

constexpr Mask full_mask(std::size_t n) noexcept {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}
constexpr Mask bit(std::size_t i) noexcept { return Mask{1} << i; }
constexpr bool is_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }
constexpr bool is_proper_subset(Mask a, Mask b) noexcept {
  return a != b && is_subset(a, b);
}
constexpr std::size_t popcount(Mask m) noexcept {
  return static_cast<std::size_t>(std::popcount(m));
}

class AttrSet;

/// Ordered ground set of named elements. Cheap to copy; copies share the
/// same underlying element table.
class Universe {
 public:
  /// Throws InvalidInput when names is empty, has duplicates or more than
  /// kMaxUniverseSize entries.
  explicit Universe(std::vector<std::string> names);

  /// Universe with generated names: a, b, ..., z for n <= 26, else x0, x1, ...
  static Universe of_size(std::size_t n);

  std::size_t size() const noexcept;
  const std::string& name(std::size_t index) const;
  const std::vector<std::string>& names() const noexcept;
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of but throws InvalidInput for unknown names.
  std::size_t require_index(std::string_view name) const;
  Mask mask() const noexcept { return full_mask(size()); }

  AttrSet empty_set() const;
  AttrSet full_set() const;
  AttrSet set_of(std::initializer_list<std::string_view> names) const;
  AttrSet set_of(std::span<const std::string> names) const;
  AttrSet from_mask(Mask bits) const;

  /// True when both share a table or list the same names in the same order.
  friend bool operator==(const Universe& a, const Universe& b) noexcept;

 private:
  struct Rep;
  std::shared_ptr<const Rep> rep_;
};

/// A subset of a Universe.
class AttrSet {
 public:
  /// Throws InvalidInput if bits outside the universe are set.
  AttrSet(Universe universe, Mask bits);

  const Universe& universe() const noexcept { return universe_; }
  Mask bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool full() const noexcept { return bits_ == universe_.mask(); }
  bool contains(std::size_t index) const noexcept {
    return index < 64 && (bits_ >> index & 1U) != 0;
  }

  bool subset_of(const AttrSet& other) const;
  bool proper_subset_of(const AttrSet& other) const;
  bool intersects(const AttrSet& other) const;

  AttrSet complement() const;
  AttrSet with(std::size_t index) const;
  AttrSet without(std::size_t index) const;

  /// Member indices in ascending order.
  std::vector<std::size_t> indices() const;
  /// Member names in universe order.
  std::vector<std::string> names() const;
  /// "{a,b}" style rendering in universe order.
  std::string to_string() const;

  friend AttrSet operator|(const AttrSet& a, const AttrSet& b);
  friend AttrSet operator&(const AttrSet& a, const AttrSet& b);
  friend AttrSet operator-(const AttrSet& a, const AttrSet& b);

  friend bool operator==(const AttrSet& a, const AttrSet& b) noexcept {
    return a.bits_ == b.bits_ && a.universe_ == b.universe_;
  }
  /// Canonical order: ascending bit pattern. Throws UniverseMismatch.
  friend std::strong_ordering operator<=>(const AttrSet& a, const AttrSet& b);

 private:
  friend class Universe;
  struct Trusted {};
  AttrSet(Universe universe, Mask bits, Trusted) noexcept
      : universe_(std::move(universe)), bits_(bits) {}

  Universe universe_;
  Mask bits_;
};

/// Throws UniverseMismatch unless a and b are equal universes.
void require_same_universe(const Universe& a, const Universe& b);

}  // namespace clkeys
