#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tspwalk/multigraph.hpp"

namespace testing_support {

using tspwalk::EdgeId;
using tspwalk::Multigraph;
using tspwalk::Vertex;

struct NamedGraph {
  std::string name;
  Multigraph graph;
};

// Named graphs, cycles, thetas, K23-constructible and seeded random graphs.
std::vector<NamedGraph> corpus(std::size_t max_n);

// Minimum excess by trying every edge subset; independent of the library oracle.
// Optional root: {min with root (-2 convention), min without root}.
struct BruteExcess {
  int exc = 0;
  std::optional<int> with;
  int without = 0;
};
BruteExcess brute_excess(const Multigraph& g, std::optional<EdgeId> root = std::nullopt);

// Connectivity by plain search, skipping masked vertices and edges.
bool connected_without(const Multigraph& g, const std::vector<char>& vertex_out,
                       const std::vector<char>& edge_out);

Multigraph edges_graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

// Exact (n + n2)/4 scaled by four.
long long quarter_size(const Multigraph& g);

}  // namespace testing_support
