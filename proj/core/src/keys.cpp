#include "clkeys/keys.hpp"

#include <algorithm>

#include "clkeys/error.hpp"

namespace clkeys {

namespace {

void require_brute_force_size(const char* what, std::size_t n,
                              std::size_t limit) {
  if (n > limit) throw LimitExceeded(what, n, limit);
}

std::vector<Mask> nonempty_only(std::span<const Mask> family) {
  std::vector<Mask> out;
  out.reserve(family.size());
  std::copy_if(family.begin(), family.end(), std::back_inserter(out),
               [](Mask m) { return m != 0; });
  return out;
}

}  // namespace

AttrSet independent_set(const ClosureOperation& f, const AttrSet& x) {
  return f.evaluate(x).complement();
}

SetFamily independent_family(const ClosureSystem& closed) {
  return complement_family(closed.closed_sets());
}

SetFamily independent_family(const ClosureOperation& f, std::size_t limit) {
  return independent_family(closed_sets(f, limit));
}

SetFamily minimal_independent_family(const ClosureSystem& closed) {
  const SetFamily independent = independent_family(closed);
  return family_from_canonical(
      closed.universe(), masks::minimal(nonempty_only(independent.masks())));
}

SetFamily minimal_independent_family(const ClosureOperation& f,
                                     std::size_t limit) {
  return minimal_independent_family(closed_sets(f, limit));
}

bool is_key(const ClosureOperation& f, const AttrSet& k) {
  return f.evaluate(k).full();
}

AttrSet extract_min_key(const ClosureOperation& f,
                        std::span<const std::size_t> order) {
  const Universe& u = f.universe();
  const std::size_t n = u.size();
  if (order.size() != n) {
    throw InvalidInput("removal order must list every element exactly once");
  }
  Mask seen = 0;
  for (std::size_t i : order) {
    if (i >= n || (seen & bit(i))) {
      throw InvalidInput("removal order must list every element exactly once");
    }
    seen |= bit(i);
  }

  const Mask all = u.mask();
  Mask key = all;
  if (f.evaluate(key) != all) {
    throw InvalidInput("f(U) != U; the map is not a closure operation");
  }
  for (std::size_t i : order) {
    const Mask candidate = key & ~bit(i);
    if (f.evaluate(candidate) == all) key = candidate;
  }
  return u.from_mask(key);
}

AttrSet extract_min_key(const ClosureOperation& f) {
  std::vector<std::size_t> order(f.universe().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return extract_min_key(f, order);
}

SetFamily min_keys(const ClosureOperation& f, std::size_t limit) {
  return transversal_hypergraph(minimal_independent_family(f, limit));
}

SetFamily antikeys(const ClosureOperation& f, std::size_t limit) {
  return complement_family(minimal_independent_family(f, limit));
}

SetFamily brute_force_min_keys(const ClosureOperation& f, std::size_t limit) {
  const Universe& u = f.universe();
  require_brute_force_size("brute-force keys", u.size(), limit);
  const Mask all = u.mask();
  std::vector<Mask> keys;
  for (Mask x = 0;; ++x) {
    if (f.evaluate(x) == all) keys.push_back(x);
    if (x == all) break;
  }
  return family_from_canonical(u, masks::minimal(keys));
}

SetFamily brute_force_antikeys(const ClosureOperation& f, std::size_t limit) {
  const Universe& u = f.universe();
  require_brute_force_size("brute-force antikeys", u.size(), limit);
  const Mask all = u.mask();
  std::vector<Mask> nonkeys;
  for (Mask x = 0;; ++x) {
    if (f.evaluate(x) != all) nonkeys.push_back(x);
    if (x == all) break;
  }
  return family_from_canonical(u, masks::maximal(nonkeys));
}

KeyReport full_report(const ClosureOperation& f, std::size_t limit) {
  const ClosureSystem closed = closed_sets(f, limit);
  SetFamily independent = independent_family(closed);
  SetFamily minimal = family_from_canonical(
      f.universe(), masks::minimal(nonempty_only(independent.masks())));
  TransversalResult keys = min_transversals(Hypergraph(minimal));
  SetFamily anti = complement_family(minimal);
  return KeyReport{closed.closed_sets(),        std::move(independent),
                   std::move(minimal),          std::move(keys.transversals),
                   std::move(anti),             std::move(keys.stats)};
}

}  // namespace clkeys
