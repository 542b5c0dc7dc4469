#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tspwalk/multigraph.hpp"

namespace tspwalk {

// Disjoint cycles plus isolated vertices spanning a vertex set of a host graph.
class EvenCover {
 public:
  EvenCover() = default;

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  // Each cycle as an edge sequence and the matching vertex sequence.
  const std::vector<std::vector<EdgeId>>& cycles() const { return cycles_; }
  const std::vector<std::vector<Vertex>>& cycle_vertices() const { return cycle_vertices_; }
  const std::vector<Vertex>& isolated() const { return isolated_; }

  std::size_t cycle_count() const { return cycles_.size(); }
  std::size_t isolated_count() const { return isolated_.size(); }
  int excess() const { return static_cast<int>(2 * cycles_.size() + isolated_.size()); }
  bool contains(EdgeId e) const;

  friend EvenCover validate_on(const Multigraph& g, std::span<const Vertex> vertices,
                               std::span<const EdgeId> edges);

 private:
  std::vector<Vertex> vertices_;
  std::vector<EdgeId> edges_;
  std::vector<std::vector<EdgeId>> cycles_;
  std::vector<std::vector<Vertex>> cycle_vertices_;
  std::vector<Vertex> isolated_;
};

// Cover of the whole host.
EvenCover validate(const Multigraph& g, std::span<const EdgeId> edges);
// Cover of the given vertex set; every edge must have both ends inside it.
EvenCover validate_on(const Multigraph& g, std::span<const Vertex> vertices,
                      std::span<const EdgeId> edges);

// A simple path, or a single vertex when `edges` is empty.
struct OpenPath {
  std::vector<EdgeId> edges;
  // In path order from `first` to `last`.
  std::vector<Vertex> vertices;
  Vertex first = 0;
  Vertex last = 0;
};

// Removes e from its cycle. The path runs between the endpoints of e.
std::pair<OpenPath, EvenCover> open_at(const Multigraph& g, const EvenCover& f, EdgeId e);

// The single cycle formed by the segments, the links and the extra way-points.
EvenCover splice_cycle(const Multigraph& g, std::span<const OpenPath> segments,
                       std::span<const EdgeId> links, std::span<const Vertex> extra_vertices);

EvenCover disjoint_union(const Multigraph& g, std::span<const EvenCover> parts,
                         std::span<const Vertex> isolated_extra);

// Transfers a cover or path of a derived graph to its parent. Fails on edges
// that only exist in the derived graph.
EvenCover lift(const Multigraph& parent, const DerivedGraph& child, const EvenCover& f);
OpenPath lift(const DerivedGraph& child, const OpenPath& p);

// "cycle: ..." lines then one "isolated: ..." line, using vertex labels.
std::string format_cover(const Multigraph& g, const EvenCover& f);

}  // namespace tspwalk
