#include "tspwalk/approx.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "tspwalk/bricks.hpp"
#include "tspwalk/chains.hpp"
#include "tspwalk/error.hpp"

namespace tspwalk {
namespace {

constexpr HalfInteger kHalf = HalfInteger::from_twice(1);
constexpr DeltaPair kThetaPair{HalfInteger::from_twice(-1), HalfInteger::from_twice(1)};
constexpr DeltaPair kBrickPair{HalfInteger::from_int(-1), HalfInteger::from_int(1)};
constexpr DeltaPair kSuppressedPair{HalfInteger::from_twice(-3), HalfInteger::from_twice(3)};

void check_input(const Multigraph& g, EdgeId e, bool nested) {
  const ErrorKind kind = nested ? ErrorKind::kInternal : ErrorKind::kBadInput;
  if (e >= g.edge_count()) fail(kind, "root edge out of range");
  if (!g.is_subcubic()) fail(kind, "graph is not subcubic");
  if (g.is_loop_graph() || g.is_two_cycle()) return;
  if (g.ends(e).is_loop()) fail(kind, "root edge is a loop");
  if (!g.is_simple_without(e)) fail(kind, "G - e is not simple");
  if (connectivity_class(g) != ConnectivityClass::kTwoConnected) {
    fail(kind, "graph is not 2-connected");
  }
}

bool minus_edge_two_connected(const Multigraph& g, EdgeId e) {
  if (g.vertex_count() <= 2) return false;
  std::vector<char> vin(g.vertex_count(), 1);
  std::vector<char> ein(g.edge_count(), 1);
  ein[e] = 0;
  return BrickForest(g, vin, ein).brick_count() == 1;
}

// Edges at u other than e and `also_skip`.
std::vector<EdgeId> other_edges(const Multigraph& g, Vertex u, EdgeId e, EdgeId also_skip) {
  std::vector<EdgeId> out;
  for (EdgeId h : g.incident(u)) {
    if (h != e && h != also_skip) out.push_back(h);
  }
  return out;
}

DeltaPair scan_unchecked(const Multigraph& g, EdgeId e) {
  if (g.is_loop_graph()) return kThetaPair;
  if (!minus_edge_two_connected(g, e)) {
    SubcubicChain c = as_chain_closure(g, e);
    DeltaPair sum;
    for (const ChainBlock& b : c.blocks) {
      ChainClosure cl = block_closure(g, b);
      DeltaPair d = scan_unchecked(cl.graph.graph, cl.root);
      sum.delta += d.delta;
      sum.delta_hat += d.delta_hat;
    }
    return sum;
  }
  const auto [u, v] = ordered_ends(g, e);
  if (g.parallel_to(e)) {
    const std::array<Vertex, 2> pair{u, v};
    Suppression s = suppress(g, pair);
    DeltaPair reduced = scan_unchecked(s.derived.graph, s.new_edge);
    // Avoiding e costs at most reduced.delta + 3/2, and 1/2 - reduced.delta is
    // never smaller since reduced.delta <= -1/2. Keeps the pair antisymmetric.
    return {reduced.delta - kHalf, kHalf - reduced.delta};
  }
  const std::array<Vertex, 2> ends{u, v};
  if (component_count_without(g, ends) > 1) return kThetaPair;
  const std::array<Vertex, 2> nb = side_neighbors(g, e, u);
  const std::array<Vertex, 3> fan{u, nb[0], nb[1]};
  if (component_count_without(g, fan) > 1) return kSuppressedPair;
  return kBrickPair;
}

DeltaPair chain_scan(const Multigraph& host, const SubcubicChain& c) {
  if (c.trivial()) return {};
  ChainClosure cl = closure(host, c);
  return scan_unchecked(cl.graph.graph, cl.root);
}

bool within_bound(const Multigraph& g, const DeltaPair& d, bool through, int excess) {
  return through ? 4LL * excess <= through_bound_quarters(g, d.delta)
                 : 4LL * excess <= avoid_bound_quarters(g, d.delta_hat);
}

Vertex local_vertex(const DerivedGraph& d, Vertex parent) {
  const auto& map = d.embedding.vertex_to_parent;
  auto it = std::lower_bound(map.begin(), map.end(), parent);
  if (it == map.end() || *it != parent) fail(ErrorKind::kInternal, "vertex missing from subgraph");
  return static_cast<Vertex>(it - map.begin());
}

struct Assembly {
  std::vector<OpenPath> segments;
  std::vector<EdgeId> links;
  std::vector<Vertex> waypoints;
  std::vector<EvenCover> rest;
  AssemblyRecord record;
};

class Solver {
 public:
  explicit Solver(SolveObserver* observer) : observer_(observer) {}

  EvenCover algo(const Multigraph& g, EdgeId e, bool through);
  EvenCover ec(const Multigraph& g, EdgeId e, HalfInteger delta);
  EvenCover bec(const Multigraph& g, EdgeId e);
  SubroutineResult subroutine(const Multigraph& z, Vertex u, Vertex v1, Vertex v2);

 private:
  struct DepthGuard {
    explicit DepthGuard(std::size_t& d) : depth(d) { ++depth; }
    ~DepthGuard() { --depth; }
    std::size_t& depth;
  };

  EvenCover chain_case(const Multigraph& g, EdgeId e, bool through);
  EvenCover parallel_case(const Multigraph& g, EdgeId e, bool through);
  EvenCover theta_split(const Multigraph& g, EdgeId e);
  EvenCover brick_tree(const Multigraph& g, EdgeId e);
  EvenCover suppressed(const Multigraph& g, EdgeId e);

  void add_through(Assembly& a, const Multigraph& host, const DerivedGraph& d, EdgeId root);
  void add_avoid(Assembly& a, const Multigraph& host, const DerivedGraph& d, EdgeId root);
  void thread_chain(Assembly& a, const Multigraph& host, const SubcubicChain& c);
  void skip_chain(Assembly& a, const Multigraph& host, const SubcubicChain& c);
  EvenCover finish(const Multigraph& g, Assembly& a);

  SolveObserver* observer_;
  std::size_t depth_ = 0;
};

void Solver::add_through(Assembly& a, const Multigraph& host, const DerivedGraph& d,
                         EdgeId root) {
  EvenCover f = algo(d.graph, root, true);
  auto [path, rest] = open_at(d.graph, f, root);
  a.segments.push_back(lift(d, path));
  a.rest.push_back(lift(host, d, rest));
  a.record.cyclic.push_back(f.excess());
}

void Solver::add_avoid(Assembly& a, const Multigraph& host, const DerivedGraph& d,
                       EdgeId root) {
  EvenCover f = algo(d.graph, root, false);
  a.rest.push_back(lift(host, d, f));
  a.record.acyclic.push_back(f.excess());
}

void Solver::thread_chain(Assembly& a, const Multigraph& host, const SubcubicChain& c) {
  a.links.push_back(*c.first_edge);
  if (c.trivial()) return;
  a.links.push_back(*c.last_edge);
  ChainClosure cl = closure(host, c);
  add_through(a, host, cl.graph, cl.root);
}

void Solver::skip_chain(Assembly& a, const Multigraph& host, const SubcubicChain& c) {
  if (c.trivial()) return;
  ChainClosure cl = closure(host, c);
  add_avoid(a, host, cl.graph, cl.root);
}

EvenCover Solver::finish(const Multigraph& g, Assembly& a) {
  std::vector<EvenCover> parts = std::move(a.rest);
  if (a.record.spliced) parts.push_back(splice_cycle(g, a.segments, a.links, a.waypoints));
  EvenCover f = disjoint_union(g, parts, {});
  if (f.vertices().size() != g.vertex_count()) {
    fail(ErrorKind::kInternal, "assembled cover misses vertices");
  }
  int expected = a.record.spliced ? 2 : 0;
  for (int c : a.record.cyclic) expected += c - 2;
  for (int x : a.record.acyclic) expected += x;
  if (expected != f.excess()) {
    fail(ErrorKind::kInternal, "splice arithmetic gives " + std::to_string(expected) +
                                   " but the cover has excess " + std::to_string(f.excess()));
  }
  a.record.excess = f.excess();
  if (observer_) observer_->on_assembly(a.record);
  return f;
}

EvenCover Solver::algo(const Multigraph& g, EdgeId e, bool through) {
  check_input(g, e, depth_ > 0);
  DepthGuard guard(depth_);
  const DeltaPair d = scan_unchecked(g, e);
  Route route;
  EvenCover f;
  if (g.is_loop_graph()) {
    route = Route::kLoop;
    std::vector<EdgeId> edges;
    if (through) edges.push_back(e);
    f = validate(g, edges);
  } else if (!minus_edge_two_connected(g, e)) {
    route = Route::kChain;
    f = chain_case(g, e, through);
  } else if (g.parallel_to(e)) {
    route = Route::kParallel;
    f = parallel_case(g, e, through);
  } else if (!through) {
    route = Route::kAvoid;
    f = bec(g, e);
  } else if (d.delta == kThetaPair.delta) {
    route = Route::kThetaSplit;
    f = theta_split(g, e);
  } else if (d.delta == kBrickPair.delta) {
    route = Route::kBrickTree;
    f = brick_tree(g, e);
  } else {
    route = Route::kSuppressed;
    f = suppressed(g, e);
  }
  if (f.contains(e) != through) fail(ErrorKind::kInternal, "root edge membership is wrong");
  if (!within_bound(g, d, through, f.excess())) {
    fail(ErrorKind::kInternal, "cover of excess " + std::to_string(f.excess()) +
                                   " exceeds its certified bound");
  }
  if (observer_) {
    DegreeProfile p = degree_profile(g);
    observer_->on_call({p.n, p.n2, d, through, route, f.excess(), depth_ - 1});
  }
  return f;
}

EvenCover Solver::ec(const Multigraph& g, EdgeId e, HalfInteger delta) {
  if (delta == kThetaPair.delta) return theta_split(g, e);
  if (delta == kBrickPair.delta) return brick_tree(g, e);
  if (delta == kSuppressedPair.delta) return suppressed(g, e);
  fail(ErrorKind::kBadPrecondition, "no construction for estimate " + delta.to_string());
}

EvenCover Solver::chain_case(const Multigraph& g, EdgeId e, bool through) {
  SubcubicChain c = as_chain_closure(g, e);
  Assembly a;
  a.record.route = Route::kChain;
  a.record.through = through;
  a.record.spliced = through;
  for (const ChainBlock& b : c.blocks) {
    ChainClosure cl = block_closure(g, b);
    if (through) {
      add_through(a, g, cl.graph, cl.root);
    } else {
      add_avoid(a, g, cl.graph, cl.root);
    }
  }
  if (through) {
    a.links = c.links;
    a.links.push_back(e);
  }
  return finish(g, a);
}

EvenCover Solver::parallel_case(const Multigraph& g, EdgeId e, bool through) {
  const auto [u, v] = ordered_ends(g, e);
  const EdgeId twin = *g.parallel_to(e);
  std::vector<EdgeId> at_u = other_edges(g, u, e, twin);
  std::vector<EdgeId> at_v = other_edges(g, v, e, twin);
  if (at_u.size() != 1 || at_v.size() != 1) fail(ErrorKind::kInternal, "parallel pair not cubic");
  const std::array<Vertex, 2> pair{u, v};
  Suppression s = suppress(g, pair);
  Assembly a;
  a.record.route = Route::kParallel;
  a.record.through = through;
  a.record.spliced = true;
  add_through(a, g, s.derived, s.new_edge);
  a.links = {at_u[0], through ? e : twin, at_v[0]};
  a.waypoints = {u, v};
  return finish(g, a);
}

EvenCover Solver::theta_split(const Multigraph& g, EdgeId e) {
  auto split = rooted_theta_split(g, e);
  if (!split) fail(ErrorKind::kInternal, "estimate -1/2 without a rooted theta split");
  std::array<SubcubicChain, 2> c{std::move(split->first), std::move(split->second)};
  std::array<DeltaPair, 2> d{chain_scan(g, c[0]), chain_scan(g, c[1])};
  int t = 0;
  if (d[0].delta + d[1].delta_hat > HalfInteger()) t = 1;
  if (d[t].delta + d[1 - t].delta_hat > HalfInteger()) {
    fail(ErrorKind::kInternal, "no labelling of the theta chains fits");
  }
  const auto [u, v] = ordered_ends(g, e);
  Assembly a;
  a.record.route = Route::kThetaSplit;
  a.record.spliced = true;
  thread_chain(a, g, c[t]);
  skip_chain(a, g, c[1 - t]);
  a.links.push_back(e);
  a.waypoints = {u, v};
  return finish(g, a);
}

EvenCover Solver::brick_tree(const Multigraph& g, EdgeId e) {
  ZDecomposition z = z_decomposition(g, e);
  // side 0 is u, side 1 is v.
  const std::array<const std::array<SubcubicChain, 2>*, 2> chains{&z.u_chain, &z.v_chain};
  const std::array<const std::array<Vertex, 2>*, 2> attach{&z.u_attach, &z.v_attach};
  std::array<std::array<DeltaPair, 2>, 2> d;
  for (int s = 0; s < 2; ++s) {
    for (int i = 0; i < 2; ++i) d[s][i] = chain_scan(g, (*chains[s])[i]);
  }
  // Threading A_o and B_i while avoiding the other two chains.
  auto cost = [&](int s, int o, int i) {
    return d[s][o].delta + d[s][1 - o].delta_hat + d[1 - s][i].delta + d[1 - s][1 - i].delta_hat;
  };

  Assembly a;
  a.record.route = Route::kBrickTree;
  a.record.spliced = true;
  a.links.push_back(e);
  a.waypoints = {z.u, z.v};
  int s = 0;
  int o = 0;
  int i = 0;
  if (z.mode == ZMode::kSplit) {
    // u_j and v_j sit on the side of Z_j; the cycle crosses from Z_o to Z_{1-o}.
    if (cost(0, 0, 1) > HalfInteger()) o = 1;
    i = 1 - o;
    if (cost(0, o, i) > HalfInteger()) fail(ErrorKind::kInternal, "split relabelling fails");
    const std::pair<Vertex, Vertex> root{z.u_attach[o], z.v_attach[i]};
    DerivedGraph zp = derive(g, z.core_vertices, z.core_edges, std::span(&root, 1));
    add_through(a, g, zp, static_cast<EdgeId>(z.core_edges.size()));
  } else {
    bool found = false;
    for (int ss = 0; ss < 2 && !found; ++ss) {
      for (int oo = 0; oo < 2 && !found; ++oo) {
        if (cost(ss, oo, 0) <= HalfInteger() && cost(ss, oo, 1) <= HalfInteger()) {
          s = ss;
          o = oo;
          found = true;
        }
      }
    }
    if (!found) fail(ErrorKind::kInternal, "merged relabelling fails");
    DerivedGraph zg = derive(g, z.core_vertices, z.core_edges);
    SubroutineResult r =
        subroutine(zg.graph, local_vertex(zg, (*attach[s])[o]),
                   local_vertex(zg, (*attach[1 - s])[0]), local_vertex(zg, (*attach[1 - s])[1]));
    i = r.index - 1;
    auto [path, rest] = open_at(r.graph.graph, r.cover, r.added_edge);
    a.segments.push_back(lift(zg, lift(r.graph, path)));
    a.rest.push_back(lift(g, zg, lift(zg.graph, r.graph, rest)));
    a.record.cyclic.push_back(r.cover.excess());
  }
  thread_chain(a, g, (*chains[s])[o]);
  thread_chain(a, g, (*chains[1 - s])[i]);
  skip_chain(a, g, (*chains[s])[1 - o]);
  skip_chain(a, g, (*chains[1 - s])[1 - i]);
  return finish(g, a);
}

EvenCover Solver::suppressed(const Multigraph& g, EdgeId e) {
  const auto [u, v] = ordered_ends(g, e);
  const std::array<Vertex, 2> nb = side_neighbors(g, e, u);
  auto split = suppressed_theta_split(g, e);
  if (!split) fail(ErrorKind::kInternal, "estimate -3/2 without a suppressed theta split");
  const SubcubicChain& c1 = split->first;
  const SubcubicChain& c2 = split->second;
  std::size_t ell = 0;
  while (ell < c1.size() && !std::binary_search(c1.blocks[ell].vertices.begin(),
                                                 c1.blocks[ell].vertices.end(), v)) {
    ++ell;
  }
  if (ell == c1.size() || c2.trivial()) fail(ErrorKind::kInternal, "malformed suppressed split");

  const std::array<SubcubicChain, 2> parts{chain_segment(c1, 0, ell),
                                           chain_segment(c1, ell + 1, c1.size())};
  const std::array<DeltaPair, 2> d{chain_scan(g, parts[0]), chain_scan(g, parts[1])};
  int t = 0;
  if (d[0].delta + d[1].delta_hat > HalfInteger()) t = 1;
  if (d[t].delta + d[1 - t].delta_hat > HalfInteger()) {
    fail(ErrorKind::kInternal, "no labelling of the split chain fits");
  }
  const ChainBlock& block = c1.blocks[ell];
  const Vertex w = t == 0 ? block.entry : block.exit;
  const EdgeId closing = *g.edge_between(u, nb[1 - t]);

  Assembly a;
  a.record.route = Route::kSuppressed;
  a.record.spliced = true;
  thread_chain(a, g, c2);
  thread_chain(a, g, parts[t]);
  skip_chain(a, g, parts[1 - t]);
  const std::pair<Vertex, Vertex> root{w, v};
  DerivedGraph bl = derive(g, block.vertices, block.edges, std::span(&root, 1));
  add_through(a, g, bl, static_cast<EdgeId>(block.edges.size()));
  a.links.push_back(e);
  a.links.push_back(closing);
  a.waypoints = {u, nb[0], nb[1]};
  return finish(g, a);
}

EvenCover Solver::bec(const Multigraph& g, EdgeId e) {
  const Vertex u = ordered_ends(g, e).first;
  Suppression s = suppress_endpoint(g, e, u);
  Assembly a;
  a.record.route = Route::kAvoid;
  a.record.through = false;
  a.record.spliced = true;
  add_through(a, g, s.derived, s.new_edge);
  a.links = other_edges(g, u, e, e);
  a.waypoints = {u};
  return finish(g, a);
}

SubroutineResult Solver::subroutine(const Multigraph& z, Vertex u, Vertex v1, Vertex v2) {
  const std::array<Vertex, 2> vs{v1, v2};
  const EdgeId root = static_cast<EdgeId>(z.edge_count());
  std::array<DerivedGraph, 2> joined{with_added_edge(z, u, v1), with_added_edge(z, u, v2)};
  std::array<DeltaPair, 2> d{scan_unchecked(joined[0].graph, root),
                             scan_unchecked(joined[1].graph, root)};
  int best = -1;
  for (int i = 0; i < 2; ++i) {
    if (d[i].delta <= HalfInteger::from_int(-1) && (best < 0 || d[i].delta < d[best].delta)) {
      best = i;
    }
  }
  SubroutineResult r;
  if (best >= 0) {
    r.index = best + 1;
    r.cover = algo(joined[best].graph, root, true);
  } else {
    std::array<std::array<SubcubicChain, 2>, 2> c;
    std::array<std::array<DeltaPair, 2>, 2> dc;
    for (int i = 0; i < 2; ++i) {
      auto split = rooted_theta_split(joined[i].graph, root);
      if (!split) fail(ErrorKind::kInternal, "subroutine expected rooted theta chains");
      c[i] = {std::move(split->first), std::move(split->second)};
      for (int j = 0; j < 2; ++j) dc[i][j] = chain_scan(joined[i].graph, c[i][j]);
    }
    int pick_i = -1;
    int pick_j = 0;
    for (int i = 0; i < 2 && pick_i < 0; ++i) {
      for (int j = 0; j < 2 && pick_i < 0; ++j) {
        if (dc[i][j].delta + dc[i][1 - j].delta_hat <= -kHalf) {
          pick_i = i;
          pick_j = j;
        }
      }
    }
    if (pick_i < 0) fail(ErrorKind::kInternal, "subroutine relabelling fails");
    const Multigraph& h = joined[pick_i].graph;
    Assembly a;
    a.record.route = Route::kThetaSplit;
    a.record.spliced = true;
    thread_chain(a, h, c[pick_i][pick_j]);
    skip_chain(a, h, c[pick_i][1 - pick_j]);
    a.links.push_back(root);
    a.waypoints = {u, vs[pick_i]};
    r.index = pick_i + 1;
    r.cover = finish(h, a);
  }
  r.graph = std::move(joined[r.index - 1]);
  r.added_edge = root;
  if (4LL * r.cover.excess() > through_bound_quarters(r.graph.graph, HalfInteger::from_int(-1))) {
    fail(ErrorKind::kInternal, "subroutine cover exceeds its bound");
  }
  return r;
}

void check_subroutine_input(const Multigraph& z, Vertex u, Vertex v1, Vertex v2) {
  if (!z.is_simple() || !z.is_subcubic() ||
      connectivity_class(z) != ConnectivityClass::kTwoConnected) {
    fail(ErrorKind::kBadPrecondition, "Z must be simple, subcubic and 2-connected");
  }
  const std::array<Vertex, 3> vs{u, v1, v2};
  for (Vertex x : vs) {
    if (x >= z.vertex_count() || z.degree(x) != 2) {
      fail(ErrorKind::kBadPrecondition, "attachment vertices must have degree 2");
    }
  }
  if (u == v1 || u == v2 || v1 == v2) fail(ErrorKind::kBadPrecondition, "vertices not distinct");
}

// Inputs for ec and bec: the non-chain, non-parallel case.
void check_direct_input(const Multigraph& g, EdgeId e) {
  check_input(g, e, false);
  if (g.is_loop_graph() || !minus_edge_two_connected(g, e) || g.parallel_to(e)) {
    fail(ErrorKind::kBadPrecondition, "G - e must be 2-connected with no edge parallel to e");
  }
}

}  // namespace

long long through_bound_quarters(const Multigraph& g, HalfInteger delta) {
  DegreeProfile p = degree_profile(g);
  return static_cast<long long>(p.n + p.n2) + 2LL * delta.twice() + 8;
}

long long avoid_bound_quarters(const Multigraph& g, HalfInteger delta_hat) {
  DegreeProfile p = degree_profile(g);
  return static_cast<long long>(p.n + p.n2) + 2LL * delta_hat.twice();
}

DeltaPair scan(const Multigraph& g, EdgeId e) {
  check_input(g, e, false);
  return scan_unchecked(g, e);
}

EvenCover algo(const Multigraph& g, EdgeId e, bool through, SolveObserver* observer) {
  return Solver(observer).algo(g, e, through);
}

EvenCover ec(const Multigraph& g, EdgeId e, HalfInteger delta, SolveObserver* observer) {
  check_direct_input(g, e);
  if (scan_unchecked(g, e).delta != delta) {
    fail(ErrorKind::kBadPrecondition, "estimate does not match the scan");
  }
  return Solver(observer).ec(g, e, delta);
}

EvenCover bec(const Multigraph& g, EdgeId e, SolveObserver* observer) {
  check_direct_input(g, e);
  return Solver(observer).bec(g, e);
}

SubroutineResult subroutine(const Multigraph& z, Vertex u, Vertex v1, Vertex v2,
                            SolveObserver* observer) {
  check_subroutine_input(z, u, v1, v2);
  return Solver(observer).subroutine(z, u, v1, v2);
}

EvenCover solve(const Multigraph& g, SolveObserver* observer) {
  if (g.vertex_count() < 3 || !g.is_simple() || !g.is_subcubic() ||
      connectivity_class(g) != ConnectivityClass::kTwoConnected) {
    fail(ErrorKind::kBadInput, "solve needs a simple 2-connected subcubic graph with n >= 3");
  }
  Solver solver(observer);
  EvenCover through = solver.algo(g, 0, true);
  EvenCover avoid = solver.algo(g, 0, false);
  EvenCover& best = avoid.excess() < through.excess() ? avoid : through;
  if (4LL * best.excess() > through_bound_quarters(g, HalfInteger::from_int(-1))) {
    fail(ErrorKind::kInternal, "solution exceeds (n + n2)/4 + 1");
  }
  return std::move(best);
}

}  // namespace tspwalk
