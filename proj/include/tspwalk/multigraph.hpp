#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tspwalk {

// Local vertex index into one graph value. Local order equals label order.
using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
// Stable identity of a vertex across derived graphs.
using VertexLabel = std::uint32_t;

struct EdgeEnds {
  Vertex a = 0;
  Vertex b = 0;

  bool is_loop() const { return a == b; }
  Vertex other(Vertex v) const { return v == a ? b : a; }
  bool touches(Vertex v) const { return a == v || b == v; }
};

class Multigraph {
 public:
  Multigraph() = default;
  // Labels must be strictly increasing; edge endpoints are local indices.
  Multigraph(std::vector<VertexLabel> labels, std::vector<EdgeEnds> edges);

  // Vertices 0..num_vertices-1 labelled by index; edge ids follow input order.
  static Multigraph build(std::size_t num_vertices,
                          std::span<const std::pair<std::size_t, std::size_t>> edge_list);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  VertexLabel label(Vertex v) const { return labels_[v]; }
  const std::vector<VertexLabel>& labels() const { return labels_; }
  std::optional<Vertex> find_label(VertexLabel label) const;

  const EdgeEnds& ends(EdgeId e) const { return edges_[e]; }
  const std::vector<EdgeEnds>& edges() const { return edges_; }

  // Incident edge ids in increasing order; a loop is listed twice.
  std::span<const EdgeId> incident(Vertex v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_loop() const;
  bool is_simple() const;
  // True when the graph with edge `skip` removed has no loops or parallel edges.
  bool is_simple_without(EdgeId skip) const;
  std::optional<EdgeId> parallel_to(EdgeId e) const;
  // Smallest edge id joining a and b.
  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const;

  // Single vertex carrying a single loop.
  bool is_loop_graph() const;
  // Two vertices joined by exactly two parallel edges.
  bool is_two_cycle() const;
  bool is_subcubic() const;

 private:
  std::vector<VertexLabel> labels_;
  std::vector<EdgeEnds> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<EdgeId> incidence_;
};

struct DegreeProfile {
  std::size_t n = 0;
  std::size_t n2 = 0;
  std::size_t max_degree = 0;

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

DegreeProfile degree_profile(const Multigraph& g);

struct Block {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<Vertex> cut_vertices;
  std::vector<EdgeId> cut_edges;
  // Block-cut tree edges as (block index, index into cut_vertices).
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
  std::vector<std::size_t> block_of_edge;
};

BlockDecomposition block_decomposition(const Multigraph& g);

enum class ConnectivityClass { kDisconnected, kHasCutVertex, kTwoConnected, kTiny };

ConnectivityClass connectivity_class(const Multigraph& g);

bool is_connected(const Multigraph& g);

// Number of connected components of g after deleting `removed` vertices.
std::size_t component_count_without(const Multigraph& g, std::span<const Vertex> removed);

// A graph built from a parent, with the map back to the parent.
struct Embedding {
  std::vector<Vertex> vertex_to_parent;
  // Empty for edges that do not exist in the parent.
  std::vector<std::optional<EdgeId>> edge_to_parent;
};

struct DerivedGraph {
  Multigraph graph;
  Embedding embedding;
};

// Subgraph on `vertices` with `kept_edges` (in that id order), followed by
// `added_edges` given as parent vertex pairs.
DerivedGraph derive(const Multigraph& parent, std::vector<Vertex> vertices,
                    std::span<const EdgeId> kept_edges,
                    std::span<const std::pair<Vertex, Vertex>> added_edges = {});

struct Suppression {
  DerivedGraph derived;
  EdgeId new_edge = 0;
};

// Deletes S and joins its outside neighbourhood N(S) by one new edge, a loop
// when N(S) is a single vertex.
Suppression suppress(const Multigraph& g, std::span<const Vertex> s);

// Whole-graph embedding onto itself with one extra edge appended.
DerivedGraph with_added_edge(const Multigraph& g, Vertex a, Vertex b);

}  // namespace tspwalk
