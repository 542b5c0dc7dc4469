#include "tspwalk/chains.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>

#include "tspwalk/bricks.hpp"
#include "tspwalk/error.hpp"

namespace tspwalk {
namespace {

// Blocks along a brick path, entered at `entry` and left at `exit`.
SubcubicChain chain_along(const BrickForest& f, const std::vector<int>& path, Vertex entry,
                          Vertex exit) {
  SubcubicChain c;
  Vertex in = entry;
  for (std::size_t i = 0; i < path.size(); ++i) {
    ChainBlock b;
    b.vertices = f.vertices(path[i]);
    b.edges = f.edges(path[i]);
    b.entry = in;
    if (i + 1 < path.size()) {
      const BrickForest::Bridge& br = f.bridge_between(path[i], path[i + 1]);
      b.exit = br.near;
      c.links.push_back(br.edge);
      in = br.far;
    } else {
      b.exit = exit;
    }
    c.blocks.push_back(std::move(b));
  }
  return c;
}

std::size_t bricks_in_component(const BrickForest& f, int component) {
  std::size_t count = 0;
  for (int b = 0; b < static_cast<int>(f.brick_count()); ++b) {
    if (f.component_of(b) == component) ++count;
  }
  return count;
}

// Each brick strictly inside the path meets only the bridges to its path neighbours.
bool path_has_no_branches(const BrickForest& f, const std::vector<int>& path, bool open_ends) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    std::size_t expected = (i > 0 ? 1 : 0) + (i + 1 < path.size() ? 1 : 0);
    bool end = i == 0 || i + 1 == path.size();
    if (open_ends && end) continue;
    if (f.bridges(path[i]).size() != expected) return false;
  }
  return true;
}

std::vector<char> mask_without(std::size_t n, std::initializer_list<Vertex> removed) {
  std::vector<char> in(n, 1);
  for (Vertex v : removed) in[v] = 0;
  return in;
}

}  // namespace

std::vector<Vertex> SubcubicChain::interior_vertices() const {
  std::vector<Vertex> out;
  for (const ChainBlock& b : blocks) out.insert(out.end(), b.vertices.begin(), b.vertices.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeId> SubcubicChain::all_edges() const {
  std::vector<EdgeId> out(links);
  for (const ChainBlock& b : blocks) out.insert(out.end(), b.edges.begin(), b.edges.end());
  if (first_edge) out.push_back(*first_edge);
  if (last_edge && last_edge != first_edge) out.push_back(*last_edge);
  std::sort(out.begin(), out.end());
  return out;
}

SubcubicChain trivial_chain(Vertex x, EdgeId edge, Vertex y) {
  SubcubicChain c;
  c.x = x;
  c.y = y;
  c.first_edge = edge;
  c.last_edge = edge;
  return c;
}

SubcubicChain reversed(const SubcubicChain& c) {
  SubcubicChain r;
  r.x = c.y;
  r.y = c.x;
  r.first_edge = c.last_edge;
  r.last_edge = c.first_edge;
  r.blocks.assign(c.blocks.rbegin(), c.blocks.rend());
  for (ChainBlock& b : r.blocks) std::swap(b.entry, b.exit);
  r.links.assign(c.links.rbegin(), c.links.rend());
  return r;
}

SubcubicChain chain_segment(const SubcubicChain& c, std::size_t begin, std::size_t end) {
  const std::size_t k = c.blocks.size();
  if (begin > end || end > k) fail(ErrorKind::kBadInput, "chain segment out of range");
  auto edge_before = [&](std::size_t i) -> std::optional<EdgeId> {
    return i == 0 ? c.first_edge : std::optional<EdgeId>(c.links[i - 1]);
  };
  auto edge_after = [&](std::size_t i) -> std::optional<EdgeId> {
    return i + 1 == k ? c.last_edge : std::optional<EdgeId>(c.links[i]);
  };
  auto vertex_before = [&](std::size_t i) -> std::optional<Vertex> {
    return i == 0 ? c.x : std::optional<Vertex>(c.blocks[i - 1].exit);
  };
  auto vertex_after = [&](std::size_t i) -> std::optional<Vertex> {
    return i + 1 == k ? c.y : std::optional<Vertex>(c.blocks[i + 1].entry);
  };
  SubcubicChain s;
  if (begin == end) {
    // The cut edge sitting just before block `begin` (or after the last block).
    if (begin < k) {
      s.first_edge = s.last_edge = edge_before(begin);
      s.x = vertex_before(begin);
      s.y = c.blocks[begin].entry;
    } else {
      s.first_edge = s.last_edge = c.last_edge;
      s.x = c.blocks[k - 1].exit;
      s.y = c.y;
    }
    return s;
  }
  s.x = vertex_before(begin);
  s.first_edge = edge_before(begin);
  s.y = vertex_after(end - 1);
  s.last_edge = edge_after(end - 1);
  s.blocks.assign(c.blocks.begin() + begin, c.blocks.begin() + end);
  s.links.assign(c.links.begin() + begin, c.links.begin() + (end - 1));
  return s;
}

ChainClosure closure(const Multigraph& host, const SubcubicChain& c) {
  ChainClosure out;
  if (c.trivial()) return out;
  std::vector<EdgeId> kept(c.links);
  std::vector<Vertex> verts;
  for (const ChainBlock& b : c.blocks) {
    kept.insert(kept.end(), b.edges.begin(), b.edges.end());
    verts.insert(verts.end(), b.vertices.begin(), b.vertices.end());
  }
  std::sort(kept.begin(), kept.end());
  const std::pair<Vertex, Vertex> root{c.blocks.front().entry, c.blocks.back().exit};
  out.graph = derive(host, std::move(verts), kept, std::span(&root, 1));
  out.root = static_cast<EdgeId>(kept.size());
  out.kind = (c.size() == 1 && c.blocks[0].singleton()) ? ClosureKind::kLoop : ClosureKind::kProper;
  return out;
}

ChainClosure block_closure(const Multigraph& host, const ChainBlock& b) {
  ChainClosure out;
  const std::pair<Vertex, Vertex> root{b.entry, b.exit};
  out.graph = derive(host, b.vertices, b.edges, std::span(&root, 1));
  out.root = static_cast<EdgeId>(b.edges.size());
  out.kind = b.singleton() ? ClosureKind::kLoop : ClosureKind::kProper;
  return out;
}

std::vector<ChainClosure> block_closures(const Multigraph& host, const SubcubicChain& c) {
  if (c.trivial()) fail(ErrorKind::kTrivialChain, "trivial chain has no blocks");
  std::vector<ChainClosure> out;
  out.reserve(c.blocks.size());
  for (const ChainBlock& b : c.blocks) out.push_back(block_closure(host, b));
  return out;
}

std::pair<Vertex, Vertex> ordered_ends(const Multigraph& g, EdgeId e) {
  const EdgeEnds& ends = g.ends(e);
  return {std::min(ends.a, ends.b), std::max(ends.a, ends.b)};
}

std::array<Vertex, 2> side_neighbors(const Multigraph& g, EdgeId e, Vertex u) {
  std::vector<Vertex> out;
  for (EdgeId f : g.incident(u)) {
    if (f != e) out.push_back(g.ends(f).other(u));
  }
  if (out.size() != 2) {
    fail(ErrorKind::kBadPrecondition,
         "endpoint has degree " + std::to_string(g.degree(u)) + ", expected 3");
  }
  std::sort(out.begin(), out.end());
  return {out[0], out[1]};
}

SubcubicChain as_chain_closure(const Multigraph& g, EdgeId e) {
  if (g.is_loop_graph()) fail(ErrorKind::kNotAChainCase, "loop");
  const auto [x1, yk] = ordered_ends(g, e);
  if (x1 == yk) fail(ErrorKind::kNotAChainCase, "root is a loop");
  std::vector<char> vin(g.vertex_count(), 1);
  std::vector<char> ein(g.edge_count(), 1);
  ein[e] = 0;
  BrickForest f(g, vin, ein);
  if (f.brick_count() == 1) fail(ErrorKind::kNotAChainCase, "G - e is 2-connected");
  std::vector<int> path = f.path(f.brick_of(x1), f.brick_of(yk));
  if (path.size() != f.brick_count() || !path_has_no_branches(f, path, false)) {
    fail(ErrorKind::kBadPrecondition, "G - e is not a chain between the ends of e");
  }
  return chain_along(f, path, x1, yk);
}

namespace {

// Components of G - removed, each required to hang between a and b by one edge
// at each side, read as chains from a to b. Component order follows the
// smallest vertex.
std::optional<std::array<SubcubicChain, 2>> chains_between(const Multigraph& g,
                                                           std::initializer_list<Vertex> removed,
                                                           Vertex a, Vertex b) {
  std::vector<char> vin = mask_without(g.vertex_count(), removed);
  BrickForest f(g, vin);
  if (f.component_count() < 2) return std::nullopt;
  if (f.component_count() > 2) fail(ErrorKind::kBadPrecondition, "more than two components");

  std::array<std::optional<EdgeId>, 2> from_a, from_b;
  auto attach = [&](Vertex end, std::array<std::optional<EdgeId>, 2>& slot) {
    for (EdgeId h : g.incident(end)) {
      Vertex w = g.ends(h).other(end);
      if (!vin[w]) continue;
      int comp = f.component_of(f.brick_of(w));
      if (slot[comp]) fail(ErrorKind::kBadPrecondition, "component attached twice");
      slot[comp] = h;
    }
  };
  attach(a, from_a);
  attach(b, from_b);

  std::array<SubcubicChain, 2> chains;
  for (int comp = 0; comp < 2; ++comp) {
    if (!from_a[comp] || !from_b[comp]) {
      fail(ErrorKind::kBadPrecondition, "component misses an endpoint");
    }
    Vertex entry = g.ends(*from_a[comp]).other(a);
    Vertex exit = g.ends(*from_b[comp]).other(b);
    std::vector<int> path = f.path(f.brick_of(entry), f.brick_of(exit));
    if (path.size() != bricks_in_component(f, comp) || !path_has_no_branches(f, path, false)) {
      fail(ErrorKind::kBadPrecondition, "component is not a chain");
    }
    SubcubicChain c = chain_along(f, path, entry, exit);
    c.x = a;
    c.y = b;
    c.first_edge = from_a[comp];
    c.last_edge = from_b[comp];
    chains[comp] = std::move(c);
  }
  return chains;
}

}  // namespace

std::optional<std::pair<SubcubicChain, SubcubicChain>> rooted_theta_split(const Multigraph& g,
                                                                          EdgeId e) {
  const auto [u, v] = ordered_ends(g, e);
  if (u == v) fail(ErrorKind::kBadPrecondition, "root is a loop");
  if (g.parallel_to(e)) fail(ErrorKind::kBadPrecondition, "root has a parallel edge");
  auto chains = chains_between(g, {u, v}, u, v);
  if (!chains) return std::nullopt;
  return std::make_pair(std::move((*chains)[0]), std::move((*chains)[1]));
}

std::optional<std::pair<SubcubicChain, SubcubicChain>> suppressed_theta_split(const Multigraph& g,
                                                                              EdgeId e) {
  const auto [u, v] = ordered_ends(g, e);
  if (u == v) fail(ErrorKind::kBadPrecondition, "root is a loop");
  const std::array<Vertex, 2> nb = side_neighbors(g, e, u);
  if (nb[0] == nb[1] || nb[0] == v || nb[1] == v) {
    fail(ErrorKind::kBadPrecondition, "G - e is not simple at u");
  }
  auto chains = chains_between(g, {u, nb[0], nb[1]}, nb[0], nb[1]);
  if (!chains) return std::nullopt;
  auto holds_v = [&](const SubcubicChain& c) {
    for (const ChainBlock& b : c.blocks) {
      if (std::binary_search(b.vertices.begin(), b.vertices.end(), v)) return true;
    }
    return false;
  };
  if (holds_v((*chains)[1])) std::swap((*chains)[0], (*chains)[1]);
  return std::make_pair(std::move((*chains)[0]), std::move((*chains)[1]));
}

Suppression suppress_endpoint(const Multigraph& g, EdgeId e, Vertex u) {
  const EdgeEnds& ends = g.ends(e);
  if (!ends.touches(u) || ends.is_loop()) {
    fail(ErrorKind::kBadPrecondition, "u must be an endpoint of a non-loop edge");
  }
  // A twin of e makes v one of the side neighbours; that is fine here.
  const std::array<Vertex, 2> nb = side_neighbors(g, e, u);
  if (nb[0] == nb[1]) fail(ErrorKind::kBadPrecondition, "G - e is not simple at u");
  std::vector<Vertex> keep;
  keep.reserve(g.vertex_count() - 1);
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (w != u) keep.push_back(w);
  }
  std::vector<EdgeId> kept;
  kept.reserve(g.edge_count());
  for (EdgeId h = 0; h < g.edge_count(); ++h) {
    if (!g.ends(h).touches(u)) kept.push_back(h);
  }
  const std::pair<Vertex, Vertex> joined{nb[0], nb[1]};
  Suppression out;
  out.derived = derive(g, std::move(keep), kept, std::span(&joined, 1));
  out.new_edge = static_cast<EdgeId>(kept.size());
  return out;
}

ZDecomposition z_decomposition(const Multigraph& g, EdgeId e) {
  ZDecomposition z;
  std::tie(z.u, z.v) = ordered_ends(g, e);
  if (z.u == z.v || g.parallel_to(e)) {
    fail(ErrorKind::kBadPrecondition, "root must be a simple edge");
  }
  z.u_nbr = side_neighbors(g, e, z.u);
  z.v_nbr = side_neighbors(g, e, z.v);
  std::vector<char> vin = mask_without(g.vertex_count(), {z.u, z.v});
  BrickForest f(g, vin);
  if (f.component_count() != 1) fail(ErrorKind::kBadPrecondition, "G - {u,v} is disconnected");

  auto brick = [&](Vertex w) { return f.brick_of(w); };
  auto consistent = [&] {
    for (int i = 0; i < 2; ++i) {
      int a = brick(z.u_nbr[i]);
      int b = brick(z.v_nbr[i]);
      if (f.median(a, b, brick(z.u_nbr[1 - i])) != f.median(a, b, brick(z.v_nbr[1 - i]))) {
        return false;
      }
    }
    return true;
  };
  if (!consistent()) {
    std::swap(z.v_nbr[0], z.v_nbr[1]);
    if (!consistent()) fail(ErrorKind::kInternal, "no pairing of u- and v-neighbours fits");
  }
  std::array<int, 2> zb{};
  for (int i = 0; i < 2; ++i) {
    zb[i] = f.median(brick(z.u_nbr[i]), brick(z.v_nbr[i]), brick(z.u_nbr[1 - i]));
  }
  z.mode = zb[0] == zb[1] ? ZMode::kMerged : ZMode::kSplit;
  for (int i = 0; i < 2; ++i) {
    z.z_vertices[i] = f.vertices(zb[i]);
    z.z_edges[i] = f.edges(zb[i]);
  }

  // Chain from an endpoint of e through its neighbour's bricks into Z.
  auto side_chain = [&](Vertex end, Vertex nbr, int target, Vertex& attach) {
    EdgeId first = *g.edge_between(end, nbr);
    std::vector<int> path = f.path(brick(nbr), target);
    if (path.size() == 1) {
      attach = nbr;
      return trivial_chain(end, first, nbr);
    }
    path.pop_back();
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (f.bridges(path[i]).size() != (i > 0 ? 2u : 1u)) {
        fail(ErrorKind::kInternal, "attachment chain branches");
      }
    }
    const BrickForest::Bridge& last = f.bridge_between(path.back(), target);
    attach = last.far;
    SubcubicChain c = chain_along(f, path, nbr, last.near);
    c.x = end;
    c.y = attach;
    c.first_edge = first;
    c.last_edge = last.edge;
    return c;
  };
  for (int i = 0; i < 2; ++i) {
    z.u_chain[i] = side_chain(z.u, z.u_nbr[i], zb[i], z.u_attach[i]);
    z.v_chain[i] = side_chain(z.v, z.v_nbr[i], z.mode == ZMode::kMerged ? zb[0] : zb[i],
                              z.v_attach[i]);
  }

  z.core_vertices = z.z_vertices[0];
  z.core_edges = z.z_edges[0];
  if (z.mode == ZMode::kMerged) {
    std::array<Vertex, 4> at{z.u_attach[0], z.u_attach[1], z.v_attach[0], z.v_attach[1]};
    std::sort(at.begin(), at.end());
    if (std::adjacent_find(at.begin(), at.end()) != at.end() || z.z_vertices[0].size() < 3) {
      fail(ErrorKind::kInternal, "merged Z needs four distinct attachments");
    }
    return z;
  }

  std::vector<int> spine = f.path(zb[0], zb[1]);
  if (!path_has_no_branches(f, spine, true)) fail(ErrorKind::kInternal, "Y branches");
  const BrickForest::Bridge& out_of_z1 = f.bridge_between(spine[0], spine[1]);
  const BrickForest::Bridge& into_z2 = f.bridge_between(spine[spine.size() - 2], spine.back());
  if (spine.size() == 2) {
    z.y = trivial_chain(out_of_z1.near, out_of_z1.edge, out_of_z1.far);
  } else {
    std::vector<int> inner(spine.begin() + 1, spine.end() - 1);
    z.y = chain_along(f, inner, out_of_z1.far, into_z2.near);
    z.y.x = out_of_z1.near;
    z.y.y = into_z2.far;
    z.y.first_edge = out_of_z1.edge;
    z.y.last_edge = into_z2.edge;
  }
  std::vector<EdgeId> y_edges = z.y.all_edges();
  std::vector<Vertex> y_verts = z.y.interior_vertices();
  z.core_vertices.insert(z.core_vertices.end(), y_verts.begin(), y_verts.end());
  z.core_vertices.insert(z.core_vertices.end(), z.z_vertices[1].begin(), z.z_vertices[1].end());
  z.core_edges.insert(z.core_edges.end(), y_edges.begin(), y_edges.end());
  z.core_edges.insert(z.core_edges.end(), z.z_edges[1].begin(), z.z_edges[1].end());
  std::sort(z.core_vertices.begin(), z.core_vertices.end());
  std::sort(z.core_edges.begin(), z.core_edges.end());
  return z;
}

}  // namespace tspwalk
