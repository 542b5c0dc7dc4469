#include "tspwalk/bricks.hpp"

#include <algorithm>

#include "tspwalk/error.hpp"

namespace tspwalk {

BrickForest::BrickForest(const Multigraph& g, std::span<const char> vertex_in,
                         std::span<const char> edge_in) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<char> use_edge(m, 0);
  for (EdgeId e = 0; e < m; ++e) {
    const EdgeEnds& ends = g.ends(e);
    use_edge[e] = vertex_in[ends.a] && vertex_in[ends.b] && (edge_in.empty() || edge_in[e]);
  }

  // Bridges by lowpoint search; only the tree edge itself is skipped so that
  // parallel edges are never bridges.
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<char> is_bridge(m, 0);
  struct Frame {
    Vertex v;
    EdgeId parent_edge;
    std::size_t next;
  };
  const EdgeId kNoEdge = static_cast<EdgeId>(m);
  std::vector<Frame> frames;
  std::size_t time = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (!vertex_in[root] || disc[root] != kUnvisited) continue;
    disc[root] = low[root] = time++;
    frames.push_back({root, kNoEdge, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        EdgeId e = inc[f.next++];
        if (e == f.parent_edge || !use_edge[e]) continue;
        Vertex w = g.ends(e).other(f.v);
        if (disc[w] == kUnvisited) {
          disc[w] = low[w] = time++;
          frames.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      frames.pop_back();
      if (frames.empty()) break;
      Vertex p = frames.back().v;
      low[p] = std::min(low[p], low[done.v]);
      if (low[done.v] > disc[p]) is_bridge[done.parent_edge] = 1;
    }
  }

  brick_of_.assign(n, -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (!vertex_in[s] || brick_of_[s] != -1) continue;
    const int id = static_cast<int>(vertices_.size());
    vertices_.emplace_back();
    brick_of_[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      vertices_[id].push_back(v);
      for (EdgeId e : g.incident(v)) {
        if (!use_edge[e] || is_bridge[e]) continue;
        Vertex w = g.ends(e).other(v);
        if (brick_of_[w] == -1) {
          brick_of_[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(vertices_[id].begin(), vertices_[id].end());
  }
  edges_.resize(vertices_.size());
  bridges_.resize(vertices_.size());
  for (EdgeId e = 0; e < m; ++e) {
    if (!use_edge[e]) continue;
    const EdgeEnds& ends = g.ends(e);
    if (is_bridge[e]) {
      bridges_[brick_of_[ends.a]].push_back({e, ends.a, ends.b, brick_of_[ends.b]});
      bridges_[brick_of_[ends.b]].push_back({e, ends.b, ends.a, brick_of_[ends.a]});
    } else {
      edges_[brick_of_[ends.a]].push_back(e);
    }
  }

  component_of_.assign(vertices_.size(), -1);
  std::vector<int> bstack;
  for (int b = 0; b < static_cast<int>(vertices_.size()); ++b) {
    if (component_of_[b] != -1) continue;
    const int c = static_cast<int>(component_count_++);
    component_of_[b] = c;
    bstack.push_back(b);
    while (!bstack.empty()) {
      int x = bstack.back();
      bstack.pop_back();
      for (const Bridge& br : bridges_[x]) {
        if (component_of_[br.far_brick] == -1) {
          component_of_[br.far_brick] = c;
          bstack.push_back(br.far_brick);
        }
      }
    }
  }
}

const BrickForest::Bridge& BrickForest::bridge_between(int from, int to) const {
  for (const Bridge& br : bridges_[from]) {
    if (br.far_brick == to) return br;
  }
  fail(ErrorKind::kInternal, "bricks are not adjacent");
}

std::vector<int> BrickForest::path(int from, int to) const {
  if (component_of_[from] != component_of_[to]) return {};
  std::vector<int> parent(vertices_.size(), -2);
  std::vector<int> queue{from};
  parent[from] = -1;
  for (std::size_t head = 0; head < queue.size() && parent[to] == -2; ++head) {
    int x = queue[head];
    for (const Bridge& br : bridges_[x]) {
      if (parent[br.far_brick] == -2) {
        parent[br.far_brick] = x;
        queue.push_back(br.far_brick);
      }
    }
  }
  std::vector<int> out;
  for (int x = to; x != -1; x = parent[x]) out.push_back(x);
  std::reverse(out.begin(), out.end());
  return out;
}

int BrickForest::median(int a, int b, int c) const {
  std::vector<int> ab = path(a, b);
  std::vector<int> ac = path(a, c);
  if (ab.empty() || ac.empty()) fail(ErrorKind::kInternal, "median across components");
  std::size_t i = 0;
  while (i + 1 < ab.size() && i + 1 < ac.size() && ab[i + 1] == ac[i + 1]) ++i;
  return ab[i];
}

}  // namespace tspwalk
