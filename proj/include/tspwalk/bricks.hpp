#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tspwalk/multigraph.hpp"

namespace tspwalk {

// Bridge-free pieces ("bricks") of a masked subgraph and the bridges joining
// them. In a subcubic graph every cut vertex meets a bridge, so the bricks are
// exactly the single vertices and 2-connected blocks of the subgraph.
class BrickForest {
 public:
  struct Bridge {
    EdgeId edge;
    Vertex near;
    Vertex far;
    int far_brick;
  };

  // Uses vertices with vertex_in[v] != 0 and edges with edge_in[e] != 0 whose
  // endpoints are both in. An empty edge mask means every such edge.
  BrickForest(const Multigraph& g, std::span<const char> vertex_in,
              std::span<const char> edge_in = {});

  std::size_t brick_count() const { return vertices_.size(); }
  std::size_t component_count() const { return component_count_; }

  // -1 for vertices outside the mask.
  int brick_of(Vertex v) const { return brick_of_[v]; }
  int component_of(int brick) const { return component_of_[brick]; }

  const std::vector<Vertex>& vertices(int brick) const { return vertices_[brick]; }
  // Non-bridge edges with both ends in the brick.
  const std::vector<EdgeId>& edges(int brick) const { return edges_[brick]; }
  const std::vector<Bridge>& bridges(int brick) const { return bridges_[brick]; }
  const Bridge& bridge_between(int from, int to) const;

  // Brick sequence from `from` to `to`; empty when they lie in different components.
  std::vector<int> path(int from, int to) const;
  // The brick lying on all three pairwise paths.
  int median(int a, int b, int c) const;

 private:
  std::vector<int> brick_of_;
  std::vector<int> component_of_;
  std::size_t component_count_ = 0;
  std::vector<std::vector<Vertex>> vertices_;
  std::vector<std::vector<EdgeId>> edges_;
  std::vector<std::vector<Bridge>> bridges_;
};

}  // namespace tspwalk
