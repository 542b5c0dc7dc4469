#include "support.hpp"

#include <numeric>

#include "tspwalk/generators.hpp"

namespace testing_support {

using namespace tspwalk;

Multigraph edges_graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  return Multigraph::build(n, edges);
}

std::vector<NamedGraph> corpus(std::size_t max_n) {
  std::vector<NamedGraph> out;
  auto add = [&](std::string name, Multigraph g) {
    if (g.vertex_count() <= max_n) out.push_back({std::move(name), std::move(g)});
  };
  for (const char* name : {"K4", "K23", "diamond", "prism", "cube", "petersen"}) add(name, named(name));
  for (std::size_t n = 3; n <= 12; ++n) add("C" + std::to_string(n), cycle(n));
  for (std::size_t k = 1; k <= 5; ++k) add("theta" + std::to_string(k), theta(k));
  for (std::size_t s = 1; s <= 3; ++s) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      add("k23_" + std::to_string(s) + "_" + std::to_string(seed), k23_constructible(s, seed));
    }
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (std::size_t n = 4; n <= std::min<std::size_t>(max_n, 10); ++n) {
      add("rand" + std::to_string(n) + "_" + std::to_string(seed),
          random_two_connected_subcubic(n, seed, {0.4, false}));
      add("ham" + std::to_string(n) + "_" + std::to_string(seed),
          random_two_connected_subcubic(n, seed, {0.7, true}));
    }
  }
  return out;
}

BruteExcess brute_excess(const Multigraph& g, std::optional<EdgeId> root) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  constexpr int kBig = 1 << 20;
  BruteExcess best{kBig, std::nullopt, kBig};
  int best_with = kBig;
  std::vector<int> deg(n);
  std::vector<Vertex> parent(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    for (EdgeId e = 0; e < m; ++e) {
      if (mask >> e & 1) {
        deg[g.ends(e).a]++;
        deg[g.ends(e).b]++;
      }
    }
    bool even = true;
    int isolated = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (deg[v] != 0 && deg[v] != 2) even = false;
      isolated += deg[v] == 0;
    }
    if (!even) continue;
    // Components among covered vertices, by union-find.
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    int components = static_cast<int>(n) - isolated;
    for (EdgeId e = 0; e < m; ++e) {
      if (!(mask >> e & 1)) continue;
      Vertex a = find(g.ends(e).a), b = find(g.ends(e).b);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    const int exc = 2 * components + isolated;
    best.exc = std::min(best.exc, exc);
    if (root) {
      if (mask >> *root & 1) {
        best_with = std::min(best_with, exc);
      } else {
        best.without = std::min(best.without, exc);
      }
    }
  }
  if (best_with != kBig) best.with = best_with - 2;
  return best;
}

bool connected_without(const Multigraph& g, const std::vector<char>& vertex_out,
                       const std::vector<char>& edge_out) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  std::size_t alive = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (vertex_out[v]) continue;
    ++alive;
    if (stack.empty() && !seen[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
  }
  std::size_t reached = stack.size();
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      if (edge_out[e]) continue;
      Vertex w = g.ends(e).other(v);
      if (vertex_out[w] || seen[w]) continue;
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == alive;
}

long long quarter_size(const Multigraph& g) {
  const DegreeProfile p = degree_profile(g);
  return static_cast<long long>(p.n + p.n2);
}

}  // namespace testing_support
