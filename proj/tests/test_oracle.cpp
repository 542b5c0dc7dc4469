#include <doctest.h>

#include <algorithm>
#include <array>

#include "support.hpp"
#include "tspwalk/chains.hpp"
#include "tspwalk/error.hpp"
#include "tspwalk/generators.hpp"
#include "tspwalk/oracle.hpp"

using namespace tspwalk;
using testing_support::brute_excess;
using testing_support::edges_graph;

namespace {

const HalfInteger kMinusHalf = HalfInteger::from_twice(-1);

bool rooted_ok(const Multigraph& g, EdgeId e) {
  return g.is_simple_without(e) && connectivity_class(g) == ConnectivityClass::kTwoConnected;
}

}  // namespace

TEST_CASE("oracle agrees with plain subset enumeration") {
  for (const auto& [name, g] : testing_support::corpus(10)) {
    if (g.edge_count() > 16) continue;
    const ExactTable t = exact_all_edges(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto b = brute_excess(g, e);
      CHECK_MESSAGE(t.exc == b.exc, name);
      CHECK_MESSAGE(t.exc_with[e] == b.with, name);
      CHECK_MESSAGE(t.exc_without[e] == b.without, name);
    }
  }
  const Multigraph multi = edges_graph(3, {{0, 0}, {0, 1}, {1, 2}, {1, 2}, {2, 0}});
  CHECK(exact(multi).exc == brute_excess(multi).exc);
}

TEST_CASE("oracle point values") {
  // Frozen from plain subset enumeration.
  for (std::size_t k = 1; k <= 4; ++k) CHECK(exact(theta(k)).exc == 2 + static_cast<int>(k));

  const ExactReport k4 = exact(named("K4"), EdgeId{0});
  CHECK(k4.exc == 2);
  CHECK(k4.exc_with == 0);
  CHECK(k4.exc_without == 2);
  CHECK(*k4.delta == HalfInteger::from_int(-1));
  CHECK(*k4.delta_hat == HalfInteger::from_int(1));

  CHECK(exact(cycle(6)).exc == 2);
  const ExactReport p = exact(named("petersen"));
  CHECK(p.exc == 3);
  CHECK(p.best.cycle_count() == 1);
  CHECK(p.best.isolated_count() == 1);

  const ExactReport diamond = exact(named("diamond"), EdgeId{0});
  CHECK(*diamond.delta == kMinusHalf);
  CHECK(*diamond.delta_hat == -kMinusHalf);

  const Multigraph k23_chord = edges_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}});
  const ExactReport c = exact(k23_chord, EdgeId{6});
  CHECK(*c.delta == HalfInteger::from_twice(-3));
  CHECK(*c.delta_hat == HalfInteger::from_twice(3));

  CHECK(exact(k23_constructible(1, 9)).exc == 4);
  CHECK(exact(edges_graph(1, {{0, 0}}), EdgeId{0}).delta == kMinusHalf);
}

TEST_CASE("oracle witnesses and invariants") {
  for (const auto& [name, g] : testing_support::corpus(9)) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const ExactReport r = exact(g, e);
      CHECK(r.exc == std::min(*r.exc_with + 2, *r.exc_without));
      CHECK(r.best.excess() == r.exc);
      CHECK(r.best_with->contains(e));
      CHECK(r.best_with->excess() == *r.exc_with + 2);
      CHECK_FALSE(r.best_without->contains(e));
    }
  }
}

TEST_CASE("oracle size guard") {
  const Multigraph big = cycle(20);
  CHECK_THROWS_AS(exact(big), Error);
  CHECK(exact(big, std::nullopt, OracleOptions{16, true}).exc == 2);
  CHECK(exact(big, std::nullopt, OracleOptions{20, false}).exc == 2);
  CHECK_THROWS_AS(exact(edges_graph(4, {{0, 1}, {2, 3}})), Error);
}

TEST_CASE("classify point values") {
  const ClassifyFlags d = classify(named("diamond"), 0);
  CHECK(d.is_rooted_theta);
  CHECK(d.tight);
  CHECK(d.balanced == true);
  CHECK(d.minimal == true);

  const ClassifyFlags k4 = classify(named("K4"), 0);
  CHECK_FALSE(k4.is_rooted_theta);
  CHECK_FALSE(k4.balanced.has_value());

  CHECK(classify(edges_graph(1, {{0, 0}}), 0).is_loop);

  // K23 at a hub-leaf edge: a chain of a square block and a single leaf, both
  // chain-blocks tight.
  const Multigraph k23 = named("K23");
  const SubcubicChain c = as_chain_closure(k23, 0);
  for (const ChainClosure& b : block_closures(k23, c)) {
    CHECK(classify(b.graph.graph, b.root).tight);
  }
}

TEST_CASE("small-graph structural bounds") {
  std::size_t thetas = 0;
  for (const auto& [name, g] : testing_support::corpus(9)) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!rooted_ok(g, e)) continue;
      const ClassifyFlags f = classify(g, e);
      const ExactReport r = exact(g, e);
      CAPTURE(name);
      CAPTURE(e);
      // delta <= -1/2, equality exactly for balanced tight rooted thetas.
      CHECK(*r.delta <= kMinusHalf);
      const bool balanced_tight = f.is_rooted_theta && f.balanced == true && f.chains_tight == true;
      CHECK((*r.delta == kMinusHalf) == (f.is_loop || balanced_tight));
      CHECK(*r.delta + *r.delta_hat <= HalfInteger{});
      thetas += f.is_rooted_theta;
    }
  }
  CHECK(thetas > 50);
}

TEST_CASE("suppressing a chain splits delta") {
  // For e a cut edge of a chain C: delta(G, e) = delta(G/C, e') + delta(closure of C)
  // and the same for delta-hat.
  std::size_t checked = 0;
  for (const auto& [name, g] : testing_support::corpus(9)) {
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
      const auto split = rooted_theta_split(g, f);
      if (!split) continue;
      for (const SubcubicChain* c : {&split->first, &split->second}) {
        REQUIRE(c->first_edge.has_value());
        std::vector<EdgeId> cut_edges(c->links);
        cut_edges.push_back(*c->first_edge);
        cut_edges.push_back(*c->last_edge);
        const Suppression s = suppress(g, c->interior_vertices());
        const ExactReport reduced = exact(s.derived.graph, s.new_edge);
        const ChainClosure cl = closure(g, *c);
        const ExactReport piece = exact(cl.graph.graph, cl.root);
        for (EdgeId e : cut_edges) {
          const ExactReport whole = exact(g, e);
          CAPTURE(name);
          CHECK(*whole.delta == *reduced.delta + *piece.delta);
          CHECK(*whole.delta_hat == *reduced.delta_hat + *piece.delta_hat);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("two-neighbour additions to a block") {
  // delta(Z + u v1, u v1) + delta(Z + u v2, u v2) <= -2.
  std::size_t checked = 0;
  for (const auto& [name, z] : testing_support::corpus(8)) {
    std::vector<Vertex> twos;
    for (Vertex v = 0; v < z.vertex_count(); ++v) {
      if (z.degree(v) == 2) twos.push_back(v);
    }
    for (Vertex u : twos) {
      for (Vertex v1 : twos) {
        for (Vertex v2 : twos) {
          if (u == v1 || u == v2 || v1 >= v2) continue;
          const DerivedGraph a = with_added_edge(z, u, v1);
          const DerivedGraph b = with_added_edge(z, u, v2);
          const EdgeId root = static_cast<EdgeId>(z.edge_count());
          const HalfInteger sum = *exact(a.graph, root).delta + *exact(b.graph, root).delta;
          CHECK_MESSAGE(sum <= HalfInteger::from_int(-2), name);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 50);
}
