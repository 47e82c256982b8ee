#include "clkeys/closure.hpp"

#include <algorithm>
#include <unordered_set>

#include "clkeys/error.hpp"

namespace clkeys {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Calls fn(x) for every x ⊆ U, in ascending mask order.
template <class Fn>
void for_each_subset(Mask all, Fn&& fn) {
  for (Mask x = 0;; ++x) {
    fn(x);
    if (x == all) break;
  }
}

// Calls fn(s) for every s ⊆ free, in ascending mask order.
template <class Fn>
void for_each_submask(Mask free, Fn&& fn) {
  Mask s = 0;
  do {
    fn(s);
    s = (s - free) & free;
  } while (s != 0);
}

}  // namespace

ClosureSystem::ClosureSystem(SetFamily closed_sets)
    : closed_(std::move(closed_sets)) {
  const SystemReport report = validate_system(closed_);
  if (!report.contains_universe) {
    throw InvalidInput("closure system must contain the universe");
  }
  if (report.missing_intersection) {
    const auto& [a, b] = *report.missing_intersection;
    throw InvalidInput("closure system is not intersection-closed: " +
                       a.to_string() + " ∩ " + b.to_string() + " = " +
                       (a & b).to_string() + " is missing");
  }
}

ClosureOperation ClosureOperation::maximal(Universe u) {
  return ClosureOperation(std::move(u), MaximalMap{});
}

ClosureOperation ClosureOperation::identity(Universe u) {
  return ClosureOperation(std::move(u), IdentityMap{});
}

ClosureOperation ClosureOperation::translation(const AttrSet& base) {
  return ClosureOperation(base.universe(), TranslationMap{base.bits()});
}

ClosureOperation ClosureOperation::point(Universe u, std::size_t element) {
  if (element >= u.size()) {
    throw InvalidInput("point element index out of range");
  }
  return ClosureOperation(std::move(u), PointMap{element});
}

ClosureOperation ClosureOperation::point(Universe u, std::string_view element) {
  const std::size_t index = u.require_index(element);
  return ClosureOperation(std::move(u), PointMap{index});
}

ClosureOperation ClosureOperation::from_system(const ClosureSystem& system) {
  return ClosureOperation(system.universe(), SystemMap{system.closed_sets()});
}

ClosureOperation ClosureOperation::implications(Universe u,
                                                std::vector<Implication> rules) {
  for (const auto& r : rules) {
    if (!is_subset(r.lhs | r.rhs, u.mask())) {
      throw InvalidInput("implication mentions elements outside the universe");
    }
  }
  return ClosureOperation(std::move(u), ImplicationMap{std::move(rules)});
}

ClosureOperation ClosureOperation::from_function(Universe u,
                                                 std::function<Mask(Mask)> map,
                                                 std::string label) {
  if (!map) throw InvalidInput("function map must be callable");
  return ClosureOperation(std::move(u),
                          FunctionMap{std::move(map), std::move(label)});
}

std::string ClosureOperation::kind_name() const {
  return std::visit(Overloaded{
                        [](const SystemMap&) { return "system"; },
                        [](const ImplicationMap&) { return "implications"; },
                        [](const MaximalMap&) { return "maximal"; },
                        [](const IdentityMap&) { return "identity"; },
                        [](const TranslationMap&) { return "translation"; },
                        [](const PointMap&) { return "point"; },
                        [](const FunctionMap&) { return "function"; },
                    },
                    rep_);
}

bool ClosureOperation::is_known_closure() const noexcept {
  return !std::holds_alternative<FunctionMap>(rep_);
}

AttrSet ClosureOperation::evaluate(const AttrSet& x) const {
  require_same_universe(universe_, x.universe());
  return universe_.from_mask(evaluate(x.bits()));
}

Mask ClosureOperation::evaluate(Mask x) const {
  const Mask all = universe_.mask();
  return std::visit(
      Overloaded{
          [&](const SystemMap& s) {
            Mask acc = all;
            for (Mask c : s.closed.masks()) {
              if (is_subset(x, c)) acc &= c;
            }
            return acc;
          },
          [&](const ImplicationMap& s) {
            Mask cur = x;
            bool fired = true;
            while (fired) {
              fired = false;
              for (const auto& r : s.rules) {
                if (is_subset(r.lhs, cur) && !is_subset(r.rhs, cur)) {
                  cur |= r.rhs;
                  fired = true;
                }
              }
            }
            return cur;
          },
          [&](const MaximalMap&) { return all; },
          [&](const IdentityMap&) { return x; },
          [&](const TranslationMap& t) { return t.base | x; },
          [&](const PointMap& p) { return (x & bit(p.element)) ? all : x; },
          [&](const FunctionMap& fn) { return fn.map(x) & all; },
      },
      rep_);
}

SystemReport validate_system(const SetFamily& family) {
  SystemReport report;
  report.contains_universe = family.contains(family.universe().mask());
  const auto members = family.masks();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (family.contains(members[i] & members[j])) continue;
      if (!report.missing_intersection) {
        report.missing_intersection.emplace(family[i], family[j]);
      }
      ++report.missing_count;
    }
  }
  return report;
}

ClosureSystem intersection_closure(const SetFamily& family) {
  const Mask all = family.universe().mask();
  std::unordered_set<Mask> seen{all};
  std::vector<Mask> closed{all};
  std::vector<Mask> fresh;
  for (Mask f : family.masks()) {
    if (seen.contains(f)) continue;
    fresh.clear();
    // closed is intersection-closed, so adding f ∩ c for each c keeps it so.
    for (Mask c : closed) {
      if (seen.insert(f & c).second) fresh.push_back(f & c);
    }
    closed.insert(closed.end(), fresh.begin(), fresh.end());
  }
  return ClosureSystem(SetFamily(family.universe(), std::move(closed)),
                       ClosureSystem::Unchecked{});
}

ClosureSystem closed_sets(const ClosureOperation& f, std::size_t limit) {
  const Universe& u = f.universe();
  const Mask all = u.mask();
  const std::size_t n = u.size();

  if (const auto* s = std::get_if<SystemMap>(&f.representation())) {
    return ClosureSystem(s->closed, ClosureSystem::Unchecked{});
  }
  if (std::holds_alternative<MaximalMap>(f.representation())) {
    return ClosureSystem(SetFamily(u, std::vector<Mask>{all}),
                         ClosureSystem::Unchecked{});
  }
  if (const auto* t = std::get_if<TranslationMap>(&f.representation())) {
    const Mask free = all & ~t->base;
    if (popcount(free) > limit) {
      throw LimitExceeded("closed-set enumeration", popcount(free), limit);
    }
    std::vector<Mask> closed;
    for_each_submask(free, [&](Mask s) { closed.push_back(t->base | s); });
    return ClosureSystem(SetFamily(u, std::move(closed)),
                         ClosureSystem::Unchecked{});
  }

  if (n > limit) throw LimitExceeded("closed-set enumeration", n, limit);
  std::vector<Mask> closed;
  for_each_subset(all, [&](Mask x) {
    if (f.evaluate(x) == x) closed.push_back(x);
  });
  SetFamily family(u, std::move(closed));
  if (!f.is_known_closure()) return ClosureSystem(std::move(family));
  return ClosureSystem(std::move(family), ClosureSystem::Unchecked{});
}

ClosureOperation system_to_closure(const ClosureSystem& system) {
  return ClosureOperation::from_system(system);
}

const char* axiom_label(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::Extensive:
      return "C1";
    case Axiom::Monotone:
      return "C2";
    case Axiom::Idempotent:
      return "C3";
  }
  return "?";
}

bool AxiomReport::violates(Axiom axiom) const noexcept {
  return std::any_of(violations.begin(), violations.end(),
                     [axiom](const AxiomViolation& v) { return v.axiom == axiom; });
}

AxiomReport verify_axioms(const ClosureOperation& f, std::size_t limit) {
  const Universe& u = f.universe();
  const std::size_t n = u.size();
  if (n > limit) throw LimitExceeded("axiom verification", n, limit);

  const Mask all = u.mask();
  std::vector<Mask> image(std::size_t{1} << n);
  for_each_subset(all, [&](Mask x) { image[x] = f.evaluate(x); });

  AxiomReport report;
  std::optional<AxiomViolation> extensive, monotone, idempotent;
  auto note = [&u](std::optional<AxiomViolation>& slot, Axiom axiom, Mask x,
                   Mask fx, std::optional<Mask> y, std::optional<Mask> fy) {
    if (!slot) {
      slot = AxiomViolation{axiom, u.from_mask(x), u.from_mask(fx),
                            y ? std::optional(u.from_mask(*y)) : std::nullopt,
                            fy ? std::optional(u.from_mask(*fy)) : std::nullopt,
                            0};
    }
    ++slot->occurrences;
  };

  for_each_subset(all, [&](Mask x) {
    ++report.sets_checked;
    const Mask fx = image[x];
    if (!is_subset(x, fx)) note(extensive, Axiom::Extensive, x, fx, {}, {});
    if (image[fx] != fx) {
      note(idempotent, Axiom::Idempotent, x, fx, {}, image[fx]);
    }
    for_each_submask(all & ~x, [&](Mask extra) {
      ++report.pairs_checked;
      const Mask y = x | extra;
      if (!is_subset(fx, image[y])) {
        note(monotone, Axiom::Monotone, x, fx, y, image[y]);
      }
    });
  });

  for (auto* slot : {&extensive, &monotone, &idempotent}) {
    if (*slot) report.violations.push_back(std::move(**slot));
  }
  return report;
}

}  // namespace clkeys
