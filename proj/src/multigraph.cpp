#include "tspwalk/multigraph.hpp"

#include <algorithm>
#include <string>

#include "tspwalk/error.hpp"

namespace tspwalk {

Multigraph::Multigraph(std::vector<VertexLabel> labels, std::vector<EdgeEnds> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  const std::size_t n = labels_.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (labels_[i - 1] >= labels_[i]) fail(ErrorKind::kBadInput, "vertex labels must increase");
  }
  offsets_.assign(n + 1, 0);
  for (const EdgeEnds& e : edges_) {
    if (e.a >= n || e.b >= n) fail(ErrorKind::kIndexOutOfRange, "edge endpoint out of range");
    ++offsets_[e.a + 1];
    ++offsets_[e.b + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  incidence_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    incidence_[fill[edges_[id].a]++] = id;
    incidence_[fill[edges_[id].b]++] = id;
  }
}

Multigraph Multigraph::build(std::size_t num_vertices,
                             std::span<const std::pair<std::size_t, std::size_t>> edge_list) {
  std::vector<VertexLabel> labels(num_vertices);
  for (std::size_t i = 0; i < num_vertices; ++i) labels[i] = static_cast<VertexLabel>(i);
  std::vector<EdgeEnds> edges;
  edges.reserve(edge_list.size());
  for (const auto& [a, b] : edge_list) {
    if (a >= num_vertices || b >= num_vertices) {
      fail(ErrorKind::kIndexOutOfRange,
           "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" +
               std::to_string(num_vertices));
    }
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  return Multigraph(std::move(labels), std::move(edges));
}

std::optional<Vertex> Multigraph::find_label(VertexLabel label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

bool Multigraph::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const EdgeEnds& e) { return e.is_loop(); });
}

bool Multigraph::is_simple_without(EdgeId skip) const {
  std::vector<Vertex> seen;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    seen.clear();
    for (EdgeId e : incident(v)) {
      if (e == skip) continue;
      if (edges_[e].is_loop()) return false;
      seen.push_back(edges_[e].other(v));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

bool Multigraph::is_simple() const {
  return is_simple_without(static_cast<EdgeId>(edges_.size()));
}

std::optional<EdgeId> Multigraph::parallel_to(EdgeId e) const {
  const EdgeEnds& ends = edges_[e];
  for (EdgeId f : incident(ends.a)) {
    if (f == e) continue;
    const EdgeEnds& g = edges_[f];
    if ((g.a == ends.a && g.b == ends.b) || (g.a == ends.b && g.b == ends.a)) return f;
  }
  return std::nullopt;
}

std::optional<EdgeId> Multigraph::edge_between(Vertex a, Vertex b) const {
  for (EdgeId f : incident(a)) {
    if (edges_[f].other(a) == b) return f;
  }
  return std::nullopt;
}

bool Multigraph::is_loop_graph() const {
  return vertex_count() == 1 && edge_count() == 1 && edges_[0].is_loop();
}

bool Multigraph::is_two_cycle() const {
  return vertex_count() == 2 && edge_count() == 2 && !edges_[0].is_loop() &&
         !edges_[1].is_loop();
}

bool Multigraph::is_subcubic() const {
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (degree(v) > 3) return false;
  }
  return true;
}

DegreeProfile degree_profile(const Multigraph& g) {
  DegreeProfile p;
  p.n = g.vertex_count();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 2) ++p.n2;
    p.max_degree = std::max(p.max_degree, g.degree(v));
  }
  return p;
}

bool is_connected(const Multigraph& g) { return component_count_without(g, {}) <= 1; }

std::size_t component_count_without(const Multigraph& g, std::span<const Vertex> removed) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  for (Vertex v : removed) seen[v] = 1;
  std::vector<Vertex> stack;
  std::size_t count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        Vertex w = g.ends(e).other(v);
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

BlockDecomposition block_decomposition(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  BlockDecomposition out;
  if (n == 0) return out;
  if (!is_connected(g)) fail(ErrorKind::kDisconnected, "block decomposition needs a connected graph");

  out.block_of_edge.assign(g.edge_count(), 0);
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<char> in_stack_edge(g.edge_count(), 0);

  auto close_block = [&](EdgeId last) {
    Block block;
    while (true) {
      EdgeId f = edge_stack.back();
      edge_stack.pop_back();
      block.edges.push_back(f);
      block.vertices.push_back(g.ends(f).a);
      block.vertices.push_back(g.ends(f).b);
      if (f == last) break;
    }
    std::sort(block.edges.begin(), block.edges.end());
    std::sort(block.vertices.begin(), block.vertices.end());
    block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()),
                         block.vertices.end());
    for (EdgeId f : block.edges) out.block_of_edge[f] = out.blocks.size();
    out.blocks.push_back(std::move(block));
  };

  struct Frame {
    Vertex v;
    EdgeId parent_edge;
    std::size_t next;
  };
  const EdgeId kNoEdge = static_cast<EdgeId>(g.edge_count());
  std::size_t time = 0;
  std::vector<Frame> frames;

  disc[0] = low[0] = time++;
  frames.push_back({0, kNoEdge, 0});
  while (!frames.empty()) {
    Frame& f = frames.back();
    const Vertex v = f.v;
    auto inc = g.incident(v);
    if (f.next < inc.size()) {
      EdgeId e = inc[f.next++];
      if (e == f.parent_edge) continue;
      const EdgeEnds& ends = g.ends(e);
      if (ends.is_loop()) {
        if (!in_stack_edge[e]) {
          in_stack_edge[e] = 1;
          out.block_of_edge[e] = out.blocks.size();
          out.blocks.push_back(Block{{v}, {e}});
        }
        continue;
      }
      Vertex w = ends.other(v);
      if (disc[w] == kUnvisited) {
        edge_stack.push_back(e);
        disc[w] = low[w] = time++;
        frames.push_back({w, e, 0});
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    const Frame done = f;
    frames.pop_back();
    if (frames.empty()) break;
    const Vertex p = frames.back().v;
    low[p] = std::min(low[p], low[done.v]);
    if (low[done.v] >= disc[p]) close_block(done.parent_edge);
  }
  if (out.blocks.empty()) out.blocks.push_back(Block{{0}, {}});

  // Cut vertices are exactly the vertices lying in two or more non-loop blocks.
  std::vector<std::size_t> membership(n, 0);
  for (const Block& b : out.blocks) {
    if (b.edges.size() == 1 && g.ends(b.edges[0]).is_loop()) continue;
    for (Vertex v : b.vertices) ++membership[v];
  }
  std::vector<std::size_t> cut_index(n, kUnvisited);
  for (Vertex v = 0; v < n; ++v) {
    if (membership[v] >= 2) {
      cut_index[v] = out.cut_vertices.size();
      out.cut_vertices.push_back(v);
    }
  }
  for (std::size_t bi = 0; bi < out.blocks.size(); ++bi) {
    const Block& b = out.blocks[bi];
    if (b.edges.size() == 1 && !g.ends(b.edges[0]).is_loop()) out.cut_edges.push_back(b.edges[0]);
    if (b.edges.size() == 1 && g.ends(b.edges[0]).is_loop()) continue;
    for (Vertex v : b.vertices) {
      if (cut_index[v] != kUnvisited) out.tree_edges.emplace_back(bi, cut_index[v]);
    }
  }
  std::sort(out.cut_edges.begin(), out.cut_edges.end());
  return out;
}

ConnectivityClass connectivity_class(const Multigraph& g) {
  if (g.vertex_count() <= 2) return ConnectivityClass::kTiny;
  if (!is_connected(g)) return ConnectivityClass::kDisconnected;
  return block_decomposition(g).cut_vertices.empty() ? ConnectivityClass::kTwoConnected
                                                      : ConnectivityClass::kHasCutVertex;
}

DerivedGraph derive(const Multigraph& parent, std::vector<Vertex> vertices,
                    std::span<const EdgeId> kept_edges,
                    std::span<const std::pair<Vertex, Vertex>> added_edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  constexpr Vertex kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> local(parent.vertex_count(), kAbsent);
  std::vector<VertexLabel> labels;
  labels.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<Vertex>(i);
    labels.push_back(parent.label(vertices[i]));
  }
  auto map_vertex = [&](Vertex v) {
    if (local[v] == kAbsent) fail(ErrorKind::kBadInput, "derived edge leaves the vertex set");
    return local[v];
  };
  DerivedGraph out;
  std::vector<EdgeEnds> edges;
  edges.reserve(kept_edges.size() + added_edges.size());
  out.embedding.edge_to_parent.reserve(edges.capacity());
  for (EdgeId e : kept_edges) {
    edges.push_back({map_vertex(parent.ends(e).a), map_vertex(parent.ends(e).b)});
    out.embedding.edge_to_parent.emplace_back(e);
  }
  for (const auto& [a, b] : added_edges) {
    edges.push_back({map_vertex(a), map_vertex(b)});
    out.embedding.edge_to_parent.emplace_back(std::nullopt);
  }
  out.graph = Multigraph(std::move(labels), std::move(edges));
  out.embedding.vertex_to_parent = std::move(vertices);
  return out;
}

Suppression suppress(const Multigraph& g, std::span<const Vertex> s) {
  std::vector<char> in_s(g.vertex_count(), 0);
  for (Vertex v : s) in_s[v] = 1;
  std::vector<Vertex> nbrs;
  for (Vertex v : s) {
    for (EdgeId e : g.incident(v)) {
      Vertex w = g.ends(e).other(v);
      if (!in_s[w]) nbrs.push_back(w);
    }
  }
  std::sort(nbrs.begin(), nbrs.end());
  nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  if (nbrs.empty() || nbrs.size() > 2) {
    fail(ErrorKind::kBadNeighborhood,
         "suppressed set has " + std::to_string(nbrs.size()) + " outside neighbours");
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in_s[v]) keep.push_back(v);
  }
  std::vector<EdgeId> kept;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!in_s[g.ends(e).a] && !in_s[g.ends(e).b]) kept.push_back(e);
  }
  const std::pair<Vertex, Vertex> joined{nbrs.front(), nbrs.back()};
  Suppression out;
  out.derived = derive(g, std::move(keep), kept, std::span(&joined, 1));
  out.new_edge = static_cast<EdgeId>(kept.size());
  return out;
}

DerivedGraph with_added_edge(const Multigraph& g, Vertex a, Vertex b) {
  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  std::vector<EdgeId> edges(g.edge_count());
  for (EdgeId e = 0; e < edges.size(); ++e) edges[e] = e;
  const std::pair<Vertex, Vertex> added{a, b};
  return derive(g, std::move(all), edges, std::span(&added, 1));
}

}  // namespace tspwalk
