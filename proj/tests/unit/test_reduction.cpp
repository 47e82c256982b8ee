#include <doctest.h>

#include "clkeys/error.hpp"
#include "clkeys/keys.hpp"
#include "clkeys/reduction.hpp"
#include "support/generators.hpp"

using namespace clkeys;

namespace {

Graph triangle() { return Graph(Universe({"u", "v", "w"}), {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("graph construction") {
  const Universe u({"u", "v", "w"});
  const Graph g(u, {{1, 0}, {0, 1}, {2, 1}});
  REQUIRE(g.edges().size() == 2);
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.edges()[1] == Edge{1, 2});
  CHECK(g.edge_family() == SetFamily::of(u, {{"u", "v"}, {"v", "w"}}));
  CHECK_THROWS_AS(Graph(u, {{1, 1}}), InvalidInput);
  CHECK_THROWS_AS(Graph(u, {{0, 3}}), InvalidInput);
}

TEST_CASE("graph_to_closure") {
  const Universe u({"u", "v", "w"});
  const auto f = graph_to_closure(Graph(u, {{0, 1}}));
  CHECK(f.evaluate(u.set_of({"u", "v"})).full());
  CHECK(f.evaluate(u.set_of({"u", "w"})) == u.set_of({"u", "w"}));
  CHECK(f.evaluate(u.set_of({"w"})) == u.set_of({"w"}));
  CHECK(verify_axioms(f).ok());

  const auto empty = graph_to_closure(Graph(u));
  for (Mask x = 0; x <= u.mask(); ++x) CHECK(empty.evaluate(x) == x);
  CHECK(min_keys(empty) == SetFamily(u, std::vector<Mask>{u.mask()}));

  const Universe pair({"p", "q"});
  CHECK(min_keys(graph_to_closure(Graph(pair, {{0, 1}}))) ==
        SetFamily::of(pair, {{"p", "q"}}));
}

TEST_CASE("the reduction satisfies the axioms for every graph on at most five vertices") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const Universe u = Universe::of_size(n);
    std::vector<Edge> slots;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    }
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots.size()); ++code) {
      std::vector<Edge> edges;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (code >> s & 1U) edges.push_back(slots[s]);
      }
      REQUIRE(verify_axioms(graph_to_closure(Graph(u, edges))).ok());
    }
  }
}

TEST_CASE("mapping only the edges themselves to V is not monotone") {
  // With a single edge {u,v} on four vertices, {u,v} -> V but {u,v,w} -> {u,v,w}.
  const Universe u({"u", "v", "w", "x"});
  const Mask edge = u.set_of({"u", "v"}).bits();
  const auto literal = ClosureOperation::from_function(
      u, [&](Mask x) { return x == edge ? u.mask() : x; });
  const AxiomReport r = verify_axioms(literal);
  CHECK(r.violates(Axiom::Monotone));
  CHECK_FALSE(r.violates(Axiom::Extensive));
}

TEST_CASE("is_graph_independent") {
  const Graph t = triangle();
  const Universe& u = t.vertices();
  for (std::size_t i = 0; i < 3; ++i) CHECK(is_graph_independent(t, u.from_mask(bit(i))));
  CHECK_FALSE(is_graph_independent(t, u.set_of({"u", "v"})));
  CHECK_FALSE(is_graph_independent(t, u.full_set()));

  const Universe abc({"a", "b", "c"});
  const Graph path(abc, {{0, 1}, {1, 2}});
  CHECK(is_graph_independent(path, abc.set_of({"a", "c"})));
  CHECK_FALSE(is_graph_independent(path, abc.set_of({"a", "b"})));
  CHECK_THROWS_AS(is_graph_independent(path, u.empty_set()), UniverseMismatch);
}

TEST_CASE("nonkey_decision") {
  const Universe u({"a", "b", "c", "d", "e"});
  const NonkeyAnswer id = nonkey_decision(ClosureOperation::identity(u), 4);
  CHECK(id.exists);
  REQUIRE(id.witness);
  CHECK(id.witness->size() == 4);
  CHECK_FALSE(nonkey_decision(ClosureOperation::identity(u), 5).exists);

  for (std::size_t k = 0; k <= 5; ++k) {
    const NonkeyAnswer max = nonkey_decision(ClosureOperation::maximal(u), k);
    CHECK_FALSE(max.exists);
    CHECK_FALSE(max.witness);
  }

  const auto f = graph_to_closure(triangle());
  const NonkeyAnswer one = nonkey_decision(f, 1);
  CHECK(one.exists);
  REQUIRE(one.witness);
  CHECK(one.witness->size() == 1);
  CHECK_FALSE(is_key(f, *one.witness));
  CHECK_FALSE(nonkey_decision(f, 2).exists);
  CHECK(nonkey_decision(f, 0).exists);

  CHECK_THROWS_AS(nonkey_decision(f, 4), InvalidInput);
  CHECK_THROWS_AS(brute_force_nonkey_decision(ClosureOperation::identity(Universe::of_size(9)), 1),
                  LimitExceeded);
}

TEST_CASE("nonkeys of the reduction are exactly the independent sets") {
  testing::Rng rng(31337);
  for (int i = 0; i < 150; ++i) {
    const Universe u = Universe::of_size(2 + i % 7);
    const Graph g = testing::random_graph(u, rng);
    const auto f = graph_to_closure(g);
    CHECK(min_keys(f) == g.edge_family());
    for (Mask x = 0; x <= u.mask(); ++x) {
      const AttrSet xs = u.from_mask(x);
      REQUIRE(!is_key(f, xs) == is_graph_independent(g, xs));
    }
    for (std::size_t k = 0; k <= u.size(); ++k) {
      const NonkeyAnswer fast = nonkey_decision(f, k);
      const NonkeyAnswer slow = brute_force_nonkey_decision(f, k);
      REQUIRE(fast.exists == slow.exists);
      if (fast.exists) {
        CHECK(fast.witness->size() >= k);
        CHECK(is_graph_independent(g, *fast.witness));
        CHECK(slow.witness->size() >= k);
        CHECK_FALSE(is_key(f, *slow.witness));
      }
    }
  }
}

TEST_CASE("k = 0 asks whether any nonkey exists") {
  testing::Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const Universe u = Universe::of_size(1 + i % 6);
    const auto f = system_to_closure(testing::random_closure_system(u, rng));
    const bool has_nonkey = !is_key(f, u.empty_set());
    CHECK(nonkey_decision(f, 0).exists == has_nonkey);
  }
  CHECK_FALSE(nonkey_decision(ClosureOperation::maximal(Universe::of_size(3)), 0).exists);
}
