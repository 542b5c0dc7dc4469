#include "tspwalk/walk.hpp"

#include <algorithm>
#include <sstream>

#include "tspwalk/error.hpp"

namespace tspwalk {

TspWalk cover_to_walk(const Multigraph& g, const EvenCover& f) {
  const std::size_t n = g.vertex_count();
  if (n == 0) fail(ErrorKind::kBadInput, "empty graph");
  if (!is_connected(g)) fail(ErrorKind::kDisconnected, "walk needs a connected graph");
  if (f.vertices().size() != n) fail(ErrorKind::kInvalidCover, "cover does not span the graph");
  for (EdgeId e : f.edges()) {
    if (e >= g.edge_count()) fail(ErrorKind::kInvalidCover, "cover edge out of range");
  }

  // Component of every vertex: one per cycle, one per isolated vertex.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, kNone);
  std::vector<std::vector<Vertex>> members;
  for (const auto& cv : f.cycle_vertices()) {
    for (Vertex v : cv) comp[v] = members.size();
    members.push_back(cv);
  }
  for (Vertex v : f.isolated()) {
    comp[v] = members.size();
    members.push_back({v});
  }
  for (auto& m : members) std::sort(m.begin(), m.end());

  // Breadth-first tree over components, each joined by its smallest edge id.
  std::vector<EdgeId> multi(f.edges());
  std::vector<char> reached(members.size(), 0);
  std::vector<std::size_t> queue{comp[0]};
  reached[comp[0]] = 1;
  std::vector<EdgeId> around;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    around.clear();
    for (Vertex v : members[queue[head]]) {
      for (EdgeId e : g.incident(v)) around.push_back(e);
    }
    std::sort(around.begin(), around.end());
    for (EdgeId e : around) {
      const EdgeEnds& ends = g.ends(e);
      for (Vertex w : {ends.a, ends.b}) {
        if (!reached[comp[w]]) {
          reached[comp[w]] = 1;
          queue.push_back(comp[w]);
          multi.push_back(e);
          multi.push_back(e);
        }
      }
    }
  }

  // Euler tour, smallest edge first. Copies of a doubled edge get distinct slots.
  std::sort(multi.begin(), multi.end());
  const std::size_t slots = multi.size();
  std::vector<std::vector<std::size_t>> at(n);
  for (std::size_t s = 0; s < slots; ++s) {
    const EdgeEnds& ends = g.ends(multi[s]);
    at[ends.a].push_back(s);
    if (!ends.is_loop()) at[ends.b].push_back(s);
  }
  for (Vertex v = 0; v < n; ++v) {
    std::size_t deg = 0;
    for (std::size_t s : at[v]) deg += g.ends(multi[s]).is_loop() ? 2 : 1;
    if (deg % 2 != 0) fail(ErrorKind::kInternal, "walk multigraph has an odd vertex");
  }
  std::vector<char> used(slots, 0);
  std::vector<std::size_t> next(n, 0);
  struct Step {
    Vertex v;
    std::size_t slot;
  };
  std::vector<Step> stack{{0, slots}};
  std::vector<Step> circuit;
  while (!stack.empty()) {
    Vertex v = stack.back().v;
    while (next[v] < at[v].size() && used[at[v][next[v]]]) ++next[v];
    if (next[v] == at[v].size()) {
      circuit.push_back(stack.back());
      stack.pop_back();
      continue;
    }
    std::size_t s = at[v][next[v]];
    used[s] = 1;
    stack.push_back({g.ends(multi[s]).other(v), s});
  }
  std::reverse(circuit.begin(), circuit.end());

  TspWalk w;
  for (const Step& st : circuit) {
    w.vertex_sequence.push_back(st.v);
    if (st.slot != slots) w.edge_sequence.push_back(multi[st.slot]);
  }
  w.length = w.edge_sequence.size();
  if (w.length != slots) fail(ErrorKind::kInternal, "Euler tour missed edges");
  return w;
}

std::size_t validate_walk(const Multigraph& g, const TspWalk& w) {
  const auto& seq = w.vertex_sequence;
  if (seq.empty() || seq.front() != seq.back()) fail(ErrorKind::kNotClosed, "walk is not closed");
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex v : seq) {
    if (v >= g.vertex_count()) fail(ErrorKind::kMissingEdge, "walk visits an unknown vertex");
    seen[v] = 1;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    fail(ErrorKind::kNotSpanning, "walk misses a vertex");
  }
  const std::size_t steps = seq.size() - 1;
  if (!w.edge_sequence.empty() && w.edge_sequence.size() != steps) {
    fail(ErrorKind::kMissingEdge, "edge sequence length does not match");
  }
  for (std::size_t i = 0; i < steps; ++i) {
    const Vertex a = seq[i];
    const Vertex b = seq[i + 1];
    if (w.edge_sequence.empty()) {
      if (!g.edge_between(a, b)) {
        fail(ErrorKind::kMissingEdge, "no edge between " + std::to_string(g.label(a)) + " and " +
                                          std::to_string(g.label(b)));
      }
    } else {
      const EdgeId e = w.edge_sequence[i];
      if (e >= g.edge_count() || !g.ends(e).touches(a) || g.ends(e).other(a) != b) {
        fail(ErrorKind::kMissingEdge, "listed edge does not join consecutive vertices");
      }
    }
  }
  return steps;
}

std::string format_walk(const Multigraph& g, const TspWalk& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.vertex_sequence.size(); ++i) {
    if (i) out << ' ';
    out << g.label(w.vertex_sequence[i]);
  }
  return out.str();
}

}  // namespace tspwalk
