#include "clkeys/universe.hpp"

#include <sstream>
#include <unordered_map>

#include "clkeys/error.hpp"

namespace clkeys {

struct Universe::Rep {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
};

Universe::Universe(std::vector<std::string> names) {
  if (names.empty()) {
    throw InvalidInput("universe must contain at least one element");
  }
  if (names.size() > kMaxUniverseSize) {
    throw InvalidInput("universe has " + std::to_string(names.size()) +
                       " elements; at most " +
                       std::to_string(kMaxUniverseSize) + " are supported");
  }
  auto rep = std::make_shared<Rep>();
  rep->index.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) {
      throw InvalidInput("element names must be non-empty");
    }
    if (!rep->index.emplace(names[i], i).second) {
      throw InvalidInput("duplicate element name '" + names[i] + "'");
    }
  }
  rep->names = std::move(names);
  rep_ = std::move(rep);
}

Universe Universe::of_size(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (n <= 26) {
      names.emplace_back(1, static_cast<char>('a' + i));
    } else {
      names.push_back("x" + std::to_string(i));
    }
  }
  return Universe(std::move(names));
}

std::size_t Universe::size() const noexcept { return rep_->names.size(); }

const std::string& Universe::name(std::size_t index) const {
  if (index >= size()) {
    throw InvalidInput("element index " + std::to_string(index) +
                       " out of range");
  }
  return rep_->names[index];
}

const std::vector<std::string>& Universe::names() const noexcept {
  return rep_->names;
}

std::optional<std::size_t> Universe::index_of(std::string_view name) const {
  auto it = rep_->index.find(std::string(name));
  if (it == rep_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw InvalidInput("unknown element '" + std::string(name) + "'");
}

AttrSet Universe::empty_set() const { return AttrSet(*this, 0, AttrSet::Trusted{}); }

AttrSet Universe::full_set() const {
  return AttrSet(*this, mask(), AttrSet::Trusted{});
}

AttrSet Universe::set_of(std::initializer_list<std::string_view> names) const {
  Mask bits = 0;
  for (auto n : names) bits |= bit(require_index(n));
  return AttrSet(*this, bits, AttrSet::Trusted{});
}

AttrSet Universe::set_of(std::span<const std::string> names) const {
  Mask bits = 0;
  for (const auto& n : names) bits |= bit(require_index(n));
  return AttrSet(*this, bits, AttrSet::Trusted{});
}

AttrSet Universe::from_mask(Mask bits) const { return AttrSet(*this, bits); }

bool operator==(const Universe& a, const Universe& b) noexcept {
  return a.rep_ == b.rep_ || a.rep_->names == b.rep_->names;
}

void require_same_universe(const Universe& a, const Universe& b) {
  if (!(a == b)) throw UniverseMismatch();
}

AttrSet::AttrSet(Universe universe, Mask bits)
    : universe_(std::move(universe)), bits_(bits) {
  if (!is_subset(bits_, universe_.mask())) {
    throw InvalidInput("set has elements outside its universe");
  }
}

bool AttrSet::subset_of(const AttrSet& other) const {
  require_same_universe(universe_, other.universe_);
  return is_subset(bits_, other.bits_);
}

bool AttrSet::proper_subset_of(const AttrSet& other) const {
  require_same_universe(universe_, other.universe_);
  return is_proper_subset(bits_, other.bits_);
}

bool AttrSet::intersects(const AttrSet& other) const {
  require_same_universe(universe_, other.universe_);
  return (bits_ & other.bits_) != 0;
}

AttrSet AttrSet::complement() const {
  return AttrSet(universe_, universe_.mask() & ~bits_, Trusted{});
}

AttrSet AttrSet::with(std::size_t index) const {
  if (index >= universe_.size()) {
    throw InvalidInput("element index out of range");
  }
  return AttrSet(universe_, bits_ | bit(index), Trusted{});
}

AttrSet AttrSet::without(std::size_t index) const {
  if (index >= universe_.size()) {
    throw InvalidInput("element index out of range");
  }
  return AttrSet(universe_, bits_ & ~bit(index), Trusted{});
}

std::vector<std::size_t> AttrSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (Mask m = bits_; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

std::vector<std::string> AttrSet::names() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (auto i : indices()) out.push_back(universe_.name(i));
  return out;
}

std::string AttrSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto i : indices()) {
    if (!first) os << ',';
    os << universe_.name(i);
    first = false;
  }
  os << '}';
  return os.str();
}

AttrSet operator|(const AttrSet& a, const AttrSet& b) {
  require_same_universe(a.universe_, b.universe_);
  return AttrSet(a.universe_, a.bits_ | b.bits_, AttrSet::Trusted{});
}

AttrSet operator&(const AttrSet& a, const AttrSet& b) {
  require_same_universe(a.universe_, b.universe_);
  return AttrSet(a.universe_, a.bits_ & b.bits_, AttrSet::Trusted{});
}

AttrSet operator-(const AttrSet& a, const AttrSet& b) {
  require_same_universe(a.universe_, b.universe_);
  return AttrSet(a.universe_, a.bits_ & ~b.bits_, AttrSet::Trusted{});
}

std::strong_ordering operator<=>(const AttrSet& a, const AttrSet& b) {
  require_same_universe(a.universe_, b.universe_);
  return a.bits_ <=> b.bits_;
}

}  // namespace clkeys
