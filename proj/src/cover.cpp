#include "tspwalk/cover.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "tspwalk/error.hpp"

namespace tspwalk {
namespace {

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool EvenCover::contains(EdgeId e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

EvenCover validate_on(const Multigraph& g, std::span<const Vertex> vertices,
                      std::span<const EdgeId> edges) {
  EvenCover f;
  f.vertices_.assign(vertices.begin(), vertices.end());
  std::sort(f.vertices_.begin(), f.vertices_.end());
  if (std::adjacent_find(f.vertices_.begin(), f.vertices_.end()) != f.vertices_.end()) {
    fail(ErrorKind::kOverlap, "vertex listed twice");
  }
  f.edges_.assign(edges.begin(), edges.end());
  std::sort(f.edges_.begin(), f.edges_.end());
  if (std::adjacent_find(f.edges_.begin(), f.edges_.end()) != f.edges_.end()) {
    fail(ErrorKind::kInvalidCover, "edge listed twice");
  }

  const std::size_t n = f.vertices_.size();
  auto position = [&](Vertex v) -> std::size_t {
    auto it = std::lower_bound(f.vertices_.begin(), f.vertices_.end(), v);
    if (it == f.vertices_.end() || *it != v) {
      fail(ErrorKind::kInvalidCover, "edge leaves the covered vertex set");
    }
    return static_cast<std::size_t>(it - f.vertices_.begin());
  };
  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  std::vector<std::array<EdgeId, 2>> adj(n, {kNone, kNone});
  std::vector<std::size_t> deg(n, 0);
  auto add = [&](std::size_t p, EdgeId e) {
    if (deg[p] >= 2) {
      fail(ErrorKind::kDegreeViolation, "vertex " + std::to_string(g.label(f.vertices_[p])) +
                                            " has cover degree above 2");
    }
    adj[p][deg[p]++] = e;
  };
  for (EdgeId e : f.edges_) {
    if (e >= g.edge_count()) fail(ErrorKind::kIndexOutOfRange, "edge id out of range");
    add(position(g.ends(e).a), e);
    add(position(g.ends(e).b), e);
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (deg[p] == 1) {
      fail(ErrorKind::kDegreeViolation,
           "vertex " + std::to_string(g.label(f.vertices_[p])) + " has cover degree 1");
    }
  }
  std::vector<char> done(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    if (deg[p] == 0) {
      f.isolated_.push_back(f.vertices_[p]);
      continue;
    }
    if (done[p]) continue;
    std::vector<EdgeId> cyc;
    std::vector<Vertex> cverts;
    const Vertex start = f.vertices_[p];
    Vertex cur = start;
    std::size_t cur_pos = p;
    EdgeId via = adj[p][0];
    while (true) {
      done[cur_pos] = 1;
      cverts.push_back(cur);
      cyc.push_back(via);
      Vertex next = g.ends(via).other(cur);
      if (next == start) break;
      std::size_t np = position(next);
      EdgeId out = adj[np][0] == via ? adj[np][1] : adj[np][0];
      cur = next;
      cur_pos = np;
      via = out;
    }
    f.cycles_.push_back(std::move(cyc));
    f.cycle_vertices_.push_back(std::move(cverts));
  }
  return f;
}

EvenCover validate(const Multigraph& g, std::span<const EdgeId> edges) {
  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return validate_on(g, all, edges);
}

std::pair<OpenPath, EvenCover> open_at(const Multigraph& g, const EvenCover& f, EdgeId e) {
  for (std::size_t c = 0; c < f.cycles().size(); ++c) {
    const std::vector<EdgeId>& cyc = f.cycles()[c];
    auto it = std::find(cyc.begin(), cyc.end(), e);
    if (it == cyc.end()) continue;
    const std::vector<Vertex>& cv = f.cycle_vertices()[c];
    const std::size_t len = cyc.size();
    const std::size_t i = static_cast<std::size_t>(it - cyc.begin());
    // cyc[i] runs from cv[i] to cv[i+1]; the path starts at cv[i+1] and walks on.
    OpenPath path;
    for (std::size_t step = 1; step < len; ++step) path.edges.push_back(cyc[(i + step) % len]);
    for (std::size_t step = 1; step <= len; ++step) path.vertices.push_back(cv[(i + step) % len]);
    path.first = path.vertices.front();
    path.last = path.vertices.back();

    std::vector<Vertex> rest_vertices;
    std::vector<EdgeId> rest_edges;
    std::vector<Vertex> on_cycle(cv.begin(), cv.end());
    std::sort(on_cycle.begin(), on_cycle.end());
    for (Vertex v : f.vertices()) {
      if (!std::binary_search(on_cycle.begin(), on_cycle.end(), v)) rest_vertices.push_back(v);
    }
    std::vector<EdgeId> cyc_sorted(cyc);
    std::sort(cyc_sorted.begin(), cyc_sorted.end());
    for (EdgeId h : f.edges()) {
      if (!std::binary_search(cyc_sorted.begin(), cyc_sorted.end(), h)) rest_edges.push_back(h);
    }
    return {std::move(path), validate_on(g, rest_vertices, rest_edges)};
  }
  fail(ErrorKind::kEdgeNotInCycle, "edge " + std::to_string(e) + " is not on a cover cycle");
}

EvenCover splice_cycle(const Multigraph& g, std::span<const OpenPath> segments,
                       std::span<const EdgeId> links, std::span<const Vertex> extra_vertices) {
  std::vector<Vertex> verts(extra_vertices.begin(), extra_vertices.end());
  std::vector<EdgeId> edges(links.begin(), links.end());
  for (const OpenPath& p : segments) {
    verts.insert(verts.end(), p.vertices.begin(), p.vertices.end());
    edges.insert(edges.end(), p.edges.begin(), p.edges.end());
  }
  std::vector<Vertex> unique_verts = sorted_unique(verts);
  if (unique_verts.size() != verts.size()) fail(ErrorKind::kNotACycle, "segments overlap");
  EvenCover f;
  try {
    f = validate_on(g, unique_verts, edges);
  } catch (const Error& err) {
    fail(ErrorKind::kNotACycle, err.what());
  }
  if (f.cycle_count() != 1 || f.isolated_count() != 0) {
    fail(ErrorKind::kNotACycle, "splice gives " + std::to_string(f.cycle_count()) +
                                    " cycles and " + std::to_string(f.isolated_count()) +
                                    " loose vertices");
  }
  return f;
}

EvenCover disjoint_union(const Multigraph& g, std::span<const EvenCover> parts,
                         std::span<const Vertex> isolated_extra) {
  std::vector<Vertex> verts(isolated_extra.begin(), isolated_extra.end());
  std::vector<EdgeId> edges;
  for (const EvenCover& p : parts) {
    verts.insert(verts.end(), p.vertices().begin(), p.vertices().end());
    edges.insert(edges.end(), p.edges().begin(), p.edges().end());
  }
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) {
    fail(ErrorKind::kOverlap, "parts share a vertex");
  }
  return validate_on(g, verts, edges);
}

EvenCover lift(const Multigraph& parent, const DerivedGraph& child, const EvenCover& f) {
  std::vector<Vertex> verts;
  verts.reserve(f.vertices().size());
  for (Vertex v : f.vertices()) verts.push_back(child.embedding.vertex_to_parent[v]);
  std::vector<EdgeId> edges;
  edges.reserve(f.edges().size());
  for (EdgeId e : f.edges()) {
    const auto& mapped = child.embedding.edge_to_parent[e];
    if (!mapped) fail(ErrorKind::kInternal, "cover uses an edge missing from the parent");
    edges.push_back(*mapped);
  }
  return validate_on(parent, verts, edges);
}

OpenPath lift(const DerivedGraph& child, const OpenPath& p) {
  OpenPath out;
  for (EdgeId e : p.edges) {
    const auto& mapped = child.embedding.edge_to_parent[e];
    if (!mapped) fail(ErrorKind::kInternal, "path uses an edge missing from the parent");
    out.edges.push_back(*mapped);
  }
  for (Vertex v : p.vertices) out.vertices.push_back(child.embedding.vertex_to_parent[v]);
  out.first = child.embedding.vertex_to_parent[p.first];
  out.last = child.embedding.vertex_to_parent[p.last];
  return out;
}

std::string format_cover(const Multigraph& g, const EvenCover& f) {
  std::vector<std::vector<Vertex>> cycles;
  for (const std::vector<Vertex>& cv : f.cycle_vertices()) {
    std::size_t start = static_cast<std::size_t>(std::min_element(cv.begin(), cv.end()) - cv.begin());
    const std::size_t len = cv.size();
    Vertex ahead = cv[(start + 1) % len];
    Vertex behind = cv[(start + len - 1) % len];
    std::vector<Vertex> seq;
    for (std::size_t s = 0; s < len; ++s) {
      seq.push_back(behind < ahead ? cv[(start + len - s) % len] : cv[(start + s) % len]);
    }
    cycles.push_back(std::move(seq));
  }
  std::sort(cycles.begin(), cycles.end());
  std::ostringstream out;
  for (const auto& seq : cycles) {
    out << "cycle:";
    for (Vertex v : seq) out << ' ' << g.label(v);
    out << '\n';
  }
  out << "isolated:";
  for (Vertex v : f.isolated()) out << ' ' << g.label(v);
  out << '\n';
  return out.str();
}

}  // namespace tspwalk
