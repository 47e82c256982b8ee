#include <doctest.h>

#include <random>

#include "clkeys/error.hpp"
#include "clkeys/set_family.hpp"
#include "support/generators.hpp"

using namespace clkeys;

TEST_CASE("universe construction and lookup") {
  Universe u({"a", "b", "c"});
  CHECK(u.size() == 3);
  CHECK(u.mask() == 0b111);
  for (std::size_t i = 0; i < u.size(); ++i) {
    CHECK(u.index_of(u.name(i)) == i);
  }
  CHECK_FALSE(u.index_of("z").has_value());
  CHECK_THROWS_AS(u.require_index("z"), InvalidInput);

  CHECK_THROWS_AS(Universe(std::vector<std::string>{}), InvalidInput);
  CHECK_THROWS_AS(Universe({"a", "b", "a"}), InvalidInput);
  CHECK_THROWS_AS(Universe({"a", ""}), InvalidInput);

  CHECK(Universe::of_size(64).mask() == ~Mask{0});
  CHECK_THROWS_AS(Universe::of_size(65), InvalidInput);
  CHECK(Universe::of_size(30).name(29) == "x29");
}

TEST_CASE("universe equality is by element list") {
  Universe a({"p", "q"});
  Universe b({"p", "q"});
  Universe c({"q", "p"});
  CHECK(a == b);
  CHECK_FALSE(a == c);
  CHECK_NOTHROW((void)(a.set_of({"p"}) | b.set_of({"q"})));
  CHECK_THROWS_AS((void)(a.set_of({"p"}) | c.set_of({"q"})), UniverseMismatch);
  CHECK_THROWS_AS((void)(a.set_of({"p"}) < c.set_of({"q"})), UniverseMismatch);
  CHECK_FALSE(a.set_of({"p"}) == c.set_of({"p"}));
}

TEST_CASE("attr set algebra") {
  Universe u({"a", "b", "c", "d"});
  const AttrSet ab = u.set_of({"a", "b"});
  const AttrSet bc = u.set_of({"b", "c"});
  CHECK((ab | bc) == u.set_of({"a", "b", "c"}));
  CHECK((ab & bc) == u.set_of({"b"}));
  CHECK((ab - bc) == u.set_of({"a"}));
  CHECK(ab.complement() == u.set_of({"c", "d"}));
  CHECK(u.set_of({"a"}).proper_subset_of(ab));
  CHECK_FALSE(ab.proper_subset_of(ab));
  CHECK(ab.subset_of(ab));
  CHECK(ab.to_string() == "{a,b}");
  CHECK(u.empty_set().to_string() == "{}");
  CHECK(ab.with(3).names() == std::vector<std::string>{"a", "b", "d"});
  CHECK(ab.without(0) == u.set_of({"b"}));
  CHECK_THROWS_AS(u.from_mask(0b10000), InvalidInput);
  CHECK_THROWS_AS(ab.with(4), InvalidInput);
}

TEST_CASE("families are deduplicated and canonically ordered") {
  Universe u({"a", "b", "c"});
  SetFamily f(u, std::vector<Mask>{0b110, 0b001, 0b110, 0b000});
  CHECK(f.size() == 3);
  CHECK(std::vector<Mask>(f.masks().begin(), f.masks().end()) ==
        std::vector<Mask>{0b000, 0b001, 0b110});
  CHECK(f.contains(u.set_of({"b", "c"})));
  CHECK_FALSE(f.contains(u.set_of({"b"})));
  CHECK(f.with(u.set_of({"b"})).size() == 4);
  CHECK(f.without(u.empty_set()).size() == 2);
  CHECK(f.to_string() == "{{},{a},{b,c}}");
  CHECK(SetFamily(u).to_string() == "{}");
  CHECK_THROWS_AS(SetFamily(u, std::vector<Mask>{0b1000}), InvalidInput);

  // Construction order never matters.
  std::vector<Mask> members{5, 3, 7, 1, 0, 6};
  std::mt19937_64 rng(11);
  const SetFamily reference(u, members);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(members.begin(), members.end(), rng);
    CHECK(SetFamily(u, members) == reference);
    CHECK(SetFamily(u, members).to_string() == reference.to_string());
  }
}

TEST_CASE("complement_family") {
  Universe u({"a", "b", "c", "d", "e"});
  CHECK(complement_family(SetFamily::of(u, {{"a"}})) ==
        SetFamily::of(u, {{"b", "c", "d", "e"}}));
  CHECK(complement_family(SetFamily(u)).empty());
  const SetFamily both = SetFamily::of(u, {{}, {"a", "b", "c", "d", "e"}});
  CHECK(complement_family(both) == both);
}

TEST_CASE("maximal_sets") {
  Universe u({"a", "b", "c"});
  CHECK(maximal_sets(SetFamily::of(u, {{"a"}, {"a", "b"}, {"c"}})) ==
        SetFamily::of(u, {{"a", "b"}, {"c"}}));
  CHECK(maximal_sets(SetFamily(u)).empty());

  // Closed(t_M) \ {U} for M={a}: {a}, {a,b}, {a,c}.
  const SetFamily closed_minus_u = SetFamily::of(u, {{"a"}, {"a", "b"}, {"a", "c"}});
  CHECK(maximal_sets(closed_minus_u) == SetFamily::of(u, {{"a", "b"}, {"a", "c"}}));
}

TEST_CASE("minimal_sets") {
  Universe u({"a", "b", "c"});
  CHECK(minimal_sets(SetFamily::of(u, {{"a"}, {"a", "b"}, {"c"}})) ==
        SetFamily::of(u, {{"a"}, {"c"}}));
  CHECK(minimal_sets(SetFamily::of(u, {{}, {"a"}})) == SetFamily::of(u, {{}}));
  const SetFamily chain_free = SetFamily::of(u, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(minimal_sets(chain_free) == chain_free);
}

TEST_CASE("is_simple") {
  Universe u({"a", "b", "c", "d", "e"});
  CHECK(is_simple(SetFamily::of(u, {{"a", "c"}, {"b", "c", "e"}, {"c", "d"}})));
  CHECK_FALSE(is_simple(SetFamily::of(u, {{"a"}, {"a", "b"}})));
  CHECK(is_simple(SetFamily(u)));
  CHECK(is_simple(SetFamily::of(u, {{}})));
}

TEST_CASE("union and intersection conventions") {
  Universe u({"a", "b", "c"});
  CHECK(union_of(SetFamily(u)).empty());
  CHECK(intersection_of(SetFamily(u)).full());
  CHECK(union_of(SetFamily::of(u, {{}})).empty());
  const SetFamily f = SetFamily::of(u, {{"a", "b"}, {"b", "c"}});
  CHECK(union_of(f).full());
  CHECK(intersection_of(f) == u.set_of({"b"}));
}

namespace {

void check_family_laws(const SetFamily& f) {
  CHECK(complement_family(complement_family(f)) == f);
  const SetFamily mx = maximal_sets(f);
  const SetFamily mn = minimal_sets(f);
  CHECK(is_simple(mx));
  CHECK(is_simple(mn));
  CHECK(mx == complement_family(minimal_sets(complement_family(f))));
  for (Mask m : mx.masks()) CHECK(f.contains(m));
  // Every member lies below some maximal one and above some minimal one.
  for (Mask m : f.masks()) {
    CHECK(std::any_of(mx.masks().begin(), mx.masks().end(),
                      [m](Mask k) { return is_subset(m, k); }));
    CHECK(std::any_of(mn.masks().begin(), mn.masks().end(),
                      [m](Mask k) { return is_subset(k, m); }));
  }
}

}  // namespace

TEST_CASE("family laws hold for every family on n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    testing::for_each_family(Universe::of_size(n), check_family_laws);
  }
}

TEST_CASE("family laws hold for random families on n = 4, 5") {
  testing::Rng rng(2024);
  for (std::size_t n : {4, 5}) {
    const Universe u = Universe::of_size(n);
    for (int i = 0; i < 300; ++i) {
      std::vector<Mask> members;
      const int m = static_cast<int>(rng() % 12);
      for (int j = 0; j < m; ++j) members.push_back(testing::random_subset(u, rng, 0.5));
      check_family_laws(SetFamily(u, members));
    }
  }
}
