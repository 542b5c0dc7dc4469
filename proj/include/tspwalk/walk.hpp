#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tspwalk/cover.hpp"
#include "tspwalk/multigraph.hpp"

namespace tspwalk {

// Closed spanning walk; vertex_sequence.front() == vertex_sequence.back().
struct TspWalk {
  std::vector<Vertex> vertex_sequence;
  // May be empty for walks read from text; then edges are inferred per step.
  std::vector<EdgeId> edge_sequence;
  std::size_t length = 0;
};

// Closed walk of length n + exc(F) - 2 starting at vertex 0.
TspWalk cover_to_walk(const Multigraph& g, const EvenCover& f);

// Checks closure, spanning and edges; returns the number of steps.
std::size_t validate_walk(const Multigraph& g, const TspWalk& w);

// Space-separated vertex labels on one line, no trailing newline.
std::string format_walk(const Multigraph& g, const TspWalk& w);

}  // namespace tspwalk
