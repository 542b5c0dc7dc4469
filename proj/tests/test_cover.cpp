#include <doctest.h>

#include <algorithm>
#include <array>

#include "support.hpp"
#include "tspwalk/approx.hpp"
#include "tspwalk/cover.hpp"
#include "tspwalk/error.hpp"
#include "tspwalk/generators.hpp"

using namespace tspwalk;
using testing_support::edges_graph;

namespace {

std::vector<EdgeId> all_edges(const Multigraph& g) {
  std::vector<EdgeId> out(g.edge_count());
  for (EdgeId e = 0; e < out.size(); ++e) out[e] = e;
  return out;
}

// 2 * components + isolated, by flood fill over the cover edges.
int recount(const Multigraph& g, const EvenCover& f) {
  std::vector<int> comp(g.vertex_count(), -1);
  int cycles = 0, isolated = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    bool any = false;
    std::vector<Vertex> stack{s};
    comp[s] = s;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        if (!f.contains(e)) continue;
        any = true;
        Vertex w = g.ends(e).other(v);
        if (comp[w] < 0) {
          comp[w] = s;
          stack.push_back(w);
        }
      }
    }
    any ? ++cycles : ++isolated;
  }
  return 2 * cycles + isolated;
}

}  // namespace

TEST_CASE("validate") {
  const EvenCover c6 = validate(cycle(6), all_edges(cycle(6)));
  CHECK(c6.cycle_count() == 1);
  CHECK(c6.isolated_count() == 0);
  CHECK(c6.excess() == 2);

  // K23: hubs 0 1, leaves 2 3 4; square 0-3-1-4.
  const Multigraph k23 = named("K23");
  const std::array<EdgeId, 4> square{1, 2, 4, 5};
  const EvenCover f = validate(k23, square);
  CHECK(f.excess() == 3);
  CHECK(f.isolated() == std::vector<Vertex>{2});

  const Multigraph k4 = named("K4");
  const std::array<EdgeId, 3> triangle{0, 1, 3};  // 0-1 0-2 1-2
  const EvenCover t = validate(k4, triangle);
  CHECK(t.cycle_count() == 1);
  CHECK(t.isolated() == std::vector<Vertex>{3});
  CHECK(t.excess() == 3);

  const std::array<EdgeId, 2> star{0, 1};
  CHECK_THROWS_AS(validate(k4, star), Error);
  const std::array<EdgeId, 3> claw{0, 1, 2};
  CHECK_THROWS_AS(validate(k4, claw), Error);
  const std::array<EdgeId, 1> bad{9};
  CHECK_THROWS_AS(validate(k4, bad), Error);
}

TEST_CASE("loops and 2-cycles are cycles") {
  const Multigraph loop = edges_graph(1, {{0, 0}});
  const std::array<EdgeId, 1> l{0};
  CHECK(validate(loop, l).excess() == 2);
  const Multigraph two = edges_graph(2, {{0, 1}, {0, 1}});
  const std::array<EdgeId, 2> both{0, 1};
  CHECK(validate(two, both).cycle_count() == 1);
}

TEST_CASE("open_at") {
  const Multigraph two = edges_graph(2, {{0, 1}, {0, 1}});
  const std::array<EdgeId, 2> both{0, 1};
  auto [p, rest] = open_at(two, validate(two, both), 0);
  CHECK(p.edges == std::vector<EdgeId>{1});
  CHECK(std::minmax(p.first, p.last) == std::minmax(Vertex{0}, Vertex{1}));
  CHECK(rest.vertices().empty());

  const Multigraph loop = edges_graph(1, {{0, 0}});
  const std::array<EdgeId, 1> l{0};
  auto [lp, lrest] = open_at(loop, validate(loop, l), 0);
  CHECK(lp.edges.empty());
  CHECK(lp.first == lp.last);

  const Multigraph c6 = cycle(6);
  for (EdgeId e = 0; e < 6; ++e) {
    auto [path, r] = open_at(c6, validate(c6, all_edges(c6)), e);
    CHECK(path.edges.size() == 5);
    const EdgeEnds& ends = c6.ends(e);
    CHECK(std::minmax(path.first, path.last) == std::minmax(ends.a, ends.b));
  }

  const std::array<EdgeId, 3> triangle{0, 1, 3};
  CHECK_THROWS_AS(open_at(named("K4"), validate(named("K4"), triangle), 5), Error);
}

TEST_CASE("splice_cycle") {
  SUBCASE("reopening and closing is the identity") {
    for (const auto& [name, g] : testing_support::corpus(12)) {
      const EvenCover f = solve(g);
      for (EdgeId e : f.edges()) {
        auto [path, rest] = open_at(g, f, e);
        const std::array<OpenPath, 1> seg{path};
        const std::array<EdgeId, 1> link{e};
        const EvenCover cyc = splice_cycle(g, seg, link, {});
        const std::array<EvenCover, 2> parts{cyc, rest};
        const EvenCover back = disjoint_union(g, parts, {});
        CHECK_MESSAGE(back.edges() == f.edges(), name);
        CHECK(back.isolated() == f.isolated());
      }
    }
  }
  SUBCASE("two empty segments and four links in K4") {
    // u = 0, v = 1, w = 2, x = 3; edges 0-1 0-2 0-3 1-2 1-3 2-3.
    const Multigraph k4 = named("K4");
    OpenPath at_w, at_x;
    at_w.vertices = {2};
    at_w.first = at_w.last = 2;
    at_x.vertices = {3};
    at_x.first = at_x.last = 3;
    const std::array<OpenPath, 2> segs{at_w, at_x};
    const std::array<EdgeId, 4> links{1, 0, 4, 5};
    const std::array<Vertex, 2> extra{0, 1};
    const EvenCover c = splice_cycle(k4, segs, links, extra);
    CHECK(c.cycle_count() == 1);
    CHECK(c.vertices().size() == 4);
    CHECK(c.excess() == 2);
  }
  SUBCASE("a lone path is not a cycle") {
    const Multigraph c6 = cycle(6);
    auto [path, rest] = open_at(c6, validate(c6, all_edges(c6)), 0);
    const std::array<OpenPath, 1> seg{path};
    CHECK_THROWS_AS(splice_cycle(c6, seg, {}, {}), Error);
  }
}

TEST_CASE("disjoint_union") {
  const Multigraph k23 = named("K23");
  const std::array<EdgeId, 4> square{1, 2, 4, 5};
  const std::array<Vertex, 4> sq_vertices{0, 1, 3, 4};
  const std::array<EvenCover, 1> parts{validate_on(k23, sq_vertices, square)};
  const std::array<Vertex, 1> leaf{2};
  CHECK(disjoint_union(k23, parts, leaf).excess() == 3);

  const std::array<Vertex, 2> two{0, 1};
  CHECK(disjoint_union(edges_graph(2, {{0, 1}}), {}, two).excess() == 2);
  CHECK(disjoint_union(Multigraph{}, {}, {}).excess() == 0);

  const std::array<EvenCover, 2> overlapping{parts[0], parts[0]};
  CHECK_THROWS_AS(disjoint_union(k23, overlapping, {}), Error);
}

TEST_CASE("excess agrees with a flood-fill recount") {
  for (const auto& [name, g] : testing_support::corpus(64)) {
    for (bool through : {true, false}) {
      const EvenCover f = algo(g, 0, through);
      CHECK_MESSAGE(f.excess() == recount(g, f), name);
    }
  }
}

TEST_CASE("cover text") {
  const Multigraph k23 = named("K23");
  const std::array<EdgeId, 4> square{1, 2, 4, 5};
  CHECK(format_cover(k23, validate(k23, square)) == "cycle: 0 3 1 4\nisolated: 2\n");
  CHECK(format_cover(cycle(4), validate(cycle(4), all_edges(cycle(4)))) ==
        "cycle: 0 1 2 3\nisolated:\n");
}
