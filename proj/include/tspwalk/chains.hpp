#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "tspwalk/multigraph.hpp"

namespace tspwalk {

// One block of a chain: a single vertex or a 2-connected piece, entered at
// `entry` and left at `exit`.
struct ChainBlock {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  Vertex entry = 0;
  Vertex exit = 0;

  bool singleton() const { return vertices.size() == 1; }
};

// x e_0 B_1 e_1 ... B_k e_k y, with all ids referring to a host graph.
// A chain recovered from a closure (G, e) has no x, y, e_0 or e_k there.
// The trivial chain has no blocks and first_edge == last_edge.
struct SubcubicChain {
  std::optional<Vertex> x;
  std::optional<Vertex> y;
  std::optional<EdgeId> first_edge;
  std::optional<EdgeId> last_edge;
  std::vector<ChainBlock> blocks;
  // Cut edges between consecutive blocks: links[i] joins blocks[i] and blocks[i+1].
  std::vector<EdgeId> links;

  bool trivial() const { return blocks.empty(); }
  std::size_t size() const { return blocks.size(); }
  std::vector<Vertex> interior_vertices() const;
  // Every edge of the chain including e_0 and e_k when present.
  std::vector<EdgeId> all_edges() const;
};

SubcubicChain trivial_chain(Vertex x, EdgeId edge, Vertex y);

// Same chain traversed from y to x.
SubcubicChain reversed(const SubcubicChain& c);

// Blocks [begin, end) with the cut edges on either side as end edges. An empty
// range gives the trivial chain on the cut edge at that position.
SubcubicChain chain_segment(const SubcubicChain& c, std::size_t begin, std::size_t end);

enum class ClosureKind { kLoop, kProper, kTrivial };

struct ChainClosure {
  DerivedGraph graph;  // empty for the trivial sentinel
  EdgeId root = 0;
  ClosureKind kind = ClosureKind::kTrivial;
};

// C - {x, y} + x_1 y_k.
ChainClosure closure(const Multigraph& host, const SubcubicChain& c);
// B + entry exit; a loop for a singleton block.
ChainClosure block_closure(const Multigraph& host, const ChainBlock& b);
std::vector<ChainClosure> block_closures(const Multigraph& host, const SubcubicChain& c);

// The chain whose closure is (G, e), oriented from the smaller endpoint of e.
SubcubicChain as_chain_closure(const Multigraph& g, EdgeId e);

// The two chains of a rooted theta (G, e), or nothing when G - {u, v} is connected.
std::optional<std::pair<SubcubicChain, SubcubicChain>> rooted_theta_split(const Multigraph& g,
                                                                          EdgeId e);

// The two chains of (G_u, f_u) between u's other neighbours u1 < u2, where u is
// the smaller endpoint of e, or nothing when G - {u, u1, u2} is connected. The
// chain containing the other endpoint of e comes first; both run from u1 to u2.
std::optional<std::pair<SubcubicChain, SubcubicChain>> suppressed_theta_split(const Multigraph& g,
                                                                              EdgeId e);

// Endpoints of e with the smaller one first.
std::pair<Vertex, Vertex> ordered_ends(const Multigraph& g, EdgeId e);

// The two neighbours of endpoint u other than through e, in vertex order.
std::array<Vertex, 2> side_neighbors(const Multigraph& g, EdgeId e, Vertex u);

// (G - e) with u suppressed; the new edge joins u's other two neighbours.
Suppression suppress_endpoint(const Multigraph& g, EdgeId e, Vertex u);

enum class ZMode { kSplit, kMerged };

// Decomposition of (G, e) around the brick tree of G - {u, v}. In split mode
// neighbour labels are paired so that u_i and v_i share the side of Z_i.
struct ZDecomposition {
  ZMode mode = ZMode::kSplit;
  Vertex u = 0;
  Vertex v = 0;
  std::array<Vertex, 2> u_nbr{};
  std::array<Vertex, 2> v_nbr{};
  std::array<Vertex, 2> u_attach{};
  std::array<Vertex, 2> v_attach{};
  std::array<SubcubicChain, 2> u_chain;
  std::array<SubcubicChain, 2> v_chain;
  std::array<std::vector<Vertex>, 2> z_vertices;
  std::array<std::vector<EdgeId>, 2> z_edges;
  // Split mode only: from a vertex of Z_1 to a vertex of Z_2.
  SubcubicChain y;
  // Z_1 + Y + Z_2 in split mode, Z in merged mode.
  std::vector<Vertex> core_vertices;
  std::vector<EdgeId> core_edges;
};

ZDecomposition z_decomposition(const Multigraph& g, EdgeId e);

}  // namespace tspwalk
