#include "tspwalk/generators.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "tspwalk/error.hpp"

namespace tspwalk {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) fail(ErrorKind::kBadInput, "empty range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Multigraph theta(std::size_t k) {
  if (k == 0) fail(ErrorKind::kBadInput, "theta needs k >= 1");
  EdgeList edges;
  for (std::size_t p = 0; p < 3; ++p) {
    const std::size_t first = 2 + p * k;
    edges.emplace_back(0, first);
    for (std::size_t i = 0; i + 1 < k; ++i) edges.emplace_back(first + i, first + i + 1);
    edges.emplace_back(1, first + k - 1);
  }
  std::sort(edges.begin(), edges.end());
  return Multigraph::build(3 * k + 2, edges);
}

Multigraph cycle(std::size_t n) {
  if (n < 3) fail(ErrorKind::kBadInput, "cycle needs n >= 3");
  EdgeList edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Multigraph::build(n, edges);
}

Multigraph diamond_op(const Multigraph& h, Vertex v) {
  if (v >= h.vertex_count()) fail(ErrorKind::kIndexOutOfRange, "vertex out of range");
  if (h.degree(v) != 2) fail(ErrorKind::kBadDegree, "diamond operation needs a degree-2 vertex");
  std::array<Vertex, 2> nb{};
  std::size_t k = 0;
  for (EdgeId e : h.incident(v)) nb[k++] = h.ends(e).other(v);
  if (nb[0] == v || nb[0] == nb[1]) fail(ErrorKind::kBadDegree, "vertex has a loop or parallel edges");
  std::sort(nb.begin(), nb.end());

  const std::size_t n = h.vertex_count();
  auto map = [&](Vertex w) -> std::size_t { return w < v ? w : w - 1; };
  const std::size_t d1 = n - 1;
  EdgeList edges;
  for (const EdgeEnds& ends : h.edges()) {
    if (ends.touches(v)) continue;
    edges.emplace_back(map(ends.a), map(ends.b));
  }
  for (std::size_t i = 0; i < 4; ++i) edges.emplace_back(d1 + i, d1 + (i + 1) % 4);
  edges.emplace_back(map(nb[0]), d1);
  edges.emplace_back(map(nb[1]), d1 + 2);
  return Multigraph::build(n + 3, edges);
}

Multigraph k23_constructible(std::size_t steps, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Multigraph g = theta(1);
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<Vertex> twos;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == 2) twos.push_back(v);
    }
    g = diamond_op(g, twos[rng.below(twos.size())]);
  }
  return g;
}

Multigraph random_two_connected_subcubic(std::size_t n, std::uint64_t seed,
                                         RandomGraphOptions options) {
  if (n < 3) fail(ErrorKind::kBadInput, "random graph needs n >= 3");
  SplitMix64 rng(seed);
  EdgeList edges;
  std::vector<int> deg(n, 0);
  auto add = [&](std::size_t a, std::size_t b) {
    edges.emplace_back(a, b);
    ++deg[a];
    ++deg[b];
  };

  const std::size_t start = options.hamiltonian_start ? n : 3 + rng.below(n - 2);
  for (std::size_t i = 0; i < start; ++i) add(i, (i + 1) % start);
  std::size_t used = start;
  // Ears with at least one new vertex keep the graph simple and 2-connected.
  while (used < n) {
    std::vector<std::size_t> twos;
    for (std::size_t v = 0; v < used; ++v) {
      if (deg[v] == 2) twos.push_back(v);
    }
    const std::size_t left = n - used;
    std::size_t len = 1 + rng.below(left);
    // Keep two degree-2 vertices around for the next ear.
    if (twos.size() == 2 && len == 1 && left > 1) len = 2;
    const std::size_t i = rng.below(twos.size());
    std::size_t j = rng.below(twos.size() - 1);
    if (j >= i) ++j;
    std::size_t prev = twos[i];
    for (std::size_t t = 0; t < len; ++t) {
      add(prev, used + t);
      prev = used + t;
    }
    add(prev, twos[j]);
    used += len;
  }

  auto adjacent = [&](std::size_t a, std::size_t b) {
    return std::any_of(edges.begin(), edges.end(), [&](const auto& p) {
      return (p.first == a && p.second == b) || (p.first == b && p.second == a);
    });
  };
  std::vector<std::pair<std::size_t, std::size_t>> chords;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (deg[a] == 2 && deg[b] == 2 && !adjacent(a, b)) chords.emplace_back(a, b);
    }
  }
  for (std::size_t i = chords.size(); i > 1; --i) std::swap(chords[i - 1], chords[rng.below(i)]);
  for (const auto& [a, b] : chords) {
    if (deg[a] != 2 || deg[b] != 2) continue;
    if (rng.unit() < options.chord_probability) add(a, b);
  }

  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  for (auto& [a, b] : edges) {
    a = perm[a];
    b = perm[b];
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  return Multigraph::build(n, edges);
}

Multigraph named(std::string_view name) {
  std::string key;
  for (char c : name) {
    if (c != '_' && c != '{' && c != '}' && c != ',') key += static_cast<char>(std::tolower(c));
  }
  if (key == "k4") return Multigraph::build(4, EdgeList{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (key == "k23") return theta(1);
  if (key == "diamond") return Multigraph::build(4, EdgeList{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  if (key == "petersen") {
    EdgeList edges;
    for (std::size_t i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);
      edges.emplace_back(i, i + 5);
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Multigraph::build(10, edges);
  }
  if (key == "prism") {
    return Multigraph::build(
        6, EdgeList{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  }
  if (key == "cube") {
    EdgeList edges;
    for (std::size_t v = 0; v < 8; ++v) {
      for (std::size_t bit = 1; bit < 8; bit <<= 1) {
        if (!(v & bit)) edges.emplace_back(v, v | bit);
      }
    }
    return Multigraph::build(8, edges);
  }
  fail(ErrorKind::kUnknownName, "no graph named '" + std::string(name) + "'");
}

}  // namespace tspwalk
