#include <doctest.h>

#include <algorithm>
#include <map>

#include "support.hpp"
#include "tspwalk/approx.hpp"
#include "tspwalk/chains.hpp"
#include "tspwalk/error.hpp"
#include "tspwalk/generators.hpp"

using namespace tspwalk;
using testing_support::edges_graph;

namespace {

using PairCount = std::map<std::pair<Vertex, Vertex>, int>;

PairCount endpoint_pairs(const Multigraph& g, const std::vector<Vertex>& to_parent) {
  PairCount out;
  for (const EdgeEnds& e : g.edges()) {
    Vertex a = to_parent[e.a], b = to_parent[e.b];
    out[{std::min(a, b), std::max(a, b)}]++;
  }
  return out;
}

bool minus_edge_two_connected(const Multigraph& g, EdgeId e) {
  std::vector<std::pair<std::size_t, std::size_t>> rest;
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f != e) rest.emplace_back(g.ends(f).a, g.ends(f).b);
  }
  return connectivity_class(Multigraph::build(g.vertex_count(), rest)) ==
         ConnectivityClass::kTwoConnected;
}

}  // namespace

TEST_CASE("chain closures of small graphs") {
  SUBCASE("2-cycle") {
    const Multigraph g = edges_graph(2, {{0, 1}, {0, 1}});
    const SubcubicChain c = as_chain_closure(g, 0);
    REQUIRE(c.size() == 2);
    CHECK(c.blocks[0].vertices == std::vector<Vertex>{0});
    CHECK(c.blocks[1].vertices == std::vector<Vertex>{1});
    for (const ChainClosure& cl : block_closures(g, c)) CHECK(cl.kind == ClosureKind::kLoop);
  }
  SUBCASE("K23 at a hub-leaf edge") {
    const Multigraph g = named("K23");
    const SubcubicChain c = as_chain_closure(g, 0);  // hub 0, leaf 2
    REQUIRE(c.size() == 2);
    CHECK(c.blocks[0].vertices == std::vector<Vertex>{0, 1, 3, 4});
    CHECK(c.blocks[1].vertices == std::vector<Vertex>{2});
    const auto cls = block_closures(g, c);
    CHECK(cls[0].kind == ClosureKind::kProper);
    CHECK(cls[1].kind == ClosureKind::kLoop);
    const Multigraph& diamond = cls[0].graph.graph;
    CHECK(degree_profile(diamond) == DegreeProfile{4, 2, 3});
    const EdgeEnds& root = diamond.ends(cls[0].root);
    CHECK(diamond.degree(root.a) == 3);
    CHECK(diamond.degree(root.b) == 3);
  }
  SUBCASE("C6") {
    const Multigraph g = cycle(6);
    for (EdgeId e = 0; e < 6; ++e) {
      const SubcubicChain c = as_chain_closure(g, e);
      CHECK(c.size() == 6);
      for (const ChainClosure& cl : block_closures(g, c)) CHECK(cl.kind == ClosureKind::kLoop);
    }
  }
  SUBCASE("not a chain case") {
    CHECK_THROWS_AS(as_chain_closure(named("K4"), 0), Error);
    CHECK_THROWS_AS(as_chain_closure(edges_graph(1, {{0, 0}}), 0), Error);
  }
}

TEST_CASE("block closures of a square block") {
  // Square 1 2 3 4 hung between 0 and 5.
  SUBCASE("opposite attachments give the diamond") {
    const Multigraph g = edges_graph(
        6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {3, 5}, {5, 0}});
    const SubcubicChain c = as_chain_closure(g, 6);
    const auto cls = block_closures(g, c);
    const auto square = std::find_if(cls.begin(), cls.end(),
                                     [](const ChainClosure& cl) { return cl.kind == ClosureKind::kProper; });
    REQUIRE(square != cls.end());
    CHECK(square->graph.graph.is_simple());
    CHECK(degree_profile(square->graph.graph) == DegreeProfile{4, 2, 3});
  }
  SUBCASE("adjacent attachments give a parallel root") {
    const Multigraph g = edges_graph(
        6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {2, 5}, {5, 0}});
    const SubcubicChain c = as_chain_closure(g, 6);
    const auto cls = block_closures(g, c);
    const auto square = std::find_if(cls.begin(), cls.end(),
                                     [](const ChainClosure& cl) { return cl.kind == ClosureKind::kProper; });
    REQUIRE(square != cls.end());
    CHECK(square->graph.graph.parallel_to(square->root).has_value());
  }
  CHECK_THROWS_AS(block_closures(cycle(3), trivial_chain(0, 0, 1)), Error);
}

TEST_CASE("rooted theta split") {
  const auto diamond = rooted_theta_split(named("diamond"), 0);
  REQUIRE(diamond.has_value());
  CHECK(diamond->first.blocks.size() == 1);
  CHECK(diamond->first.blocks[0].vertices == std::vector<Vertex>{2});
  CHECK(diamond->second.blocks[0].vertices == std::vector<Vertex>{3});
  CHECK_FALSE(rooted_theta_split(named("K4"), 0).has_value());
  CHECK_THROWS_AS(rooted_theta_split(edges_graph(2, {{0, 1}, {0, 1}}), 0), Error);
}

TEST_CASE("rooted theta split matches removal of both ends") {
  for (const auto& [name, g] : testing_support::corpus(10)) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto [u, v] = ordered_ends(g, e);
      std::vector<char> out(g.vertex_count(), 0), no_e(g.edge_count(), 0);
      out[u] = out[v] = 1;
      const bool split = !testing_support::connected_without(g, out, no_e);
      CHECK_MESSAGE(rooted_theta_split(g, e).has_value() == split, name, " edge ", e);
    }
  }
}

TEST_CASE("endpoint suppression") {
  SUBCASE("K4") {
    const Multigraph k4 = named("K4");
    const Suppression s = suppress_endpoint(k4, 0, 0);  // edge 0-1, suppress 0
    const Multigraph& h = s.derived.graph;
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 4);
    const auto twin = h.parallel_to(s.new_edge);
    REQUIRE(twin.has_value());
    const EdgeEnds& ends = h.ends(s.new_edge);
    CHECK(s.derived.embedding.vertex_to_parent[ends.a] + s.derived.embedding.vertex_to_parent[ends.b] == 5);
  }
  SUBCASE("diamond chord") {
    const Suppression s = suppress_endpoint(named("diamond"), 0, 0);
    CHECK(s.derived.graph.is_simple());
    CHECK(s.derived.graph.edge_count() == 3);
  }
  SUBCASE("square with a parallel side") {
    const Multigraph g = edges_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 1}});
    const Suppression s = suppress_endpoint(g, 4, 0);
    CHECK(s.derived.graph.vertex_count() == 3);
    CHECK(s.derived.graph.is_simple());
    const EdgeEnds& f = s.derived.graph.ends(s.new_edge);
    const auto& map = s.derived.embedding.vertex_to_parent;
    CHECK(std::min(map[f.a], map[f.b]) == 1);
    CHECK(std::max(map[f.a], map[f.b]) == 3);
  }
  CHECK_THROWS_AS(suppress_endpoint(named("K4"), 0, 2), Error);
}

TEST_CASE("z decompositions") {
  SUBCASE("K4 splits with a one-edge spine") {
    const ZDecomposition z = z_decomposition(named("K4"), 0);
    CHECK(z.mode == ZMode::kSplit);
    CHECK(z.z_vertices[0].size() == 1);
    CHECK(z.z_vertices[1].size() == 1);
    CHECK(z.y.trivial());
    for (int i = 0; i < 2; ++i) {
      CHECK(z.u_chain[i].trivial());
      CHECK(z.v_chain[i].trivial());
    }
  }
  SUBCASE("cube merges around a 6-cycle with one chord") {
    const Multigraph cube = named("cube");
    for (EdgeId e = 0; e < cube.edge_count(); ++e) {
      const ZDecomposition z = z_decomposition(cube, e);
      CHECK(z.mode == ZMode::kMerged);
      CHECK(z.core_vertices.size() == 6);
      CHECK(z.core_edges.size() == 7);
      for (int i = 0; i < 2; ++i) {
        CHECK(z.u_chain[i].trivial());
        CHECK(z.v_chain[i].trivial());
      }
    }
  }
  SUBCASE("K4 with a twice subdivided edge has a long spine") {
    // K4 on 0..3 with edge 2-3 replaced by 2-4-5-3.
    const Multigraph g = edges_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {4, 5}, {5, 3}});
    const ZDecomposition z = z_decomposition(g, 0);
    CHECK(z.mode == ZMode::kSplit);
    CHECK_FALSE(z.y.trivial());
    CHECK(z.y.size() == 2);
  }
  CHECK_THROWS_AS(z_decomposition(edges_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 1}}), 0),
                  Error);
}

TEST_CASE("z decomposition parts partition the graph") {
  std::size_t seen = 0;
  for (const auto& [name, g] : testing_support::corpus(64)) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (scan(g, e) != DeltaPair{HalfInteger::from_int(-1), HalfInteger::from_int(1)}) continue;
      if (!minus_edge_two_connected(g, e)) continue;
      const ZDecomposition z = z_decomposition(g, e);
      ++seen;
      std::vector<int> vhits(g.vertex_count(), 0), ehits(g.edge_count(), 0);
      vhits[z.u]++;
      vhits[z.v]++;
      ehits[e]++;
      for (const SubcubicChain* c : {&z.u_chain[0], &z.u_chain[1], &z.v_chain[0], &z.v_chain[1]}) {
        for (Vertex w : c->interior_vertices()) vhits[w]++;
        for (EdgeId f : c->all_edges()) ehits[f]++;
      }
      for (Vertex w : z.core_vertices) vhits[w]++;
      for (EdgeId f : z.core_edges) ehits[f]++;
      CHECK_MESSAGE(std::all_of(vhits.begin(), vhits.end(), [](int h) { return h == 1; }), name, " ", e);
      CHECK_MESSAGE(std::all_of(ehits.begin(), ehits.end(), [](int h) { return h == 1; }), name, " ", e);
    }
  }
  CHECK(seen > 100);
}

TEST_CASE("chain closures round trip and count") {
  std::size_t seen = 0;
  for (const auto& [name, g] : testing_support::corpus(64)) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (minus_edge_two_connected(g, e)) continue;
      const SubcubicChain c = as_chain_closure(g, e);
      ++seen;
      const ChainClosure cl = closure(g, c);
      CHECK(endpoint_pairs(cl.graph.graph, cl.graph.embedding.vertex_to_parent) ==
            endpoint_pairs(g, [&] {
              std::vector<Vertex> id(g.vertex_count());
              for (Vertex w = 0; w < id.size(); ++w) id[w] = w;
              return id;
            }()));
      const EdgeEnds& root = cl.graph.graph.ends(cl.root);
      const auto [u, v] = ordered_ends(g, e);
      const auto& map = cl.graph.embedding.vertex_to_parent;
      CHECK(std::min(map[root.a], map[root.b]) == u);
      CHECK(std::max(map[root.a], map[root.b]) == v);

      std::size_t n = 0, n2 = 0;
      for (const ChainClosure& b : block_closures(g, c)) {
        const DegreeProfile p = degree_profile(b.graph.graph);
        n += p.n;
        n2 += p.n2;
      }
      CHECK(n == degree_profile(g).n);
      CHECK(n2 == degree_profile(g).n2);
    }
  }
  CHECK(seen > 100);
}
