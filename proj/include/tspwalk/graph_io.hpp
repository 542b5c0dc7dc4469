#pragma once

#include <string>
#include <string_view>

#include "tspwalk/multigraph.hpp"
#include "tspwalk/walk.hpp"

namespace tspwalk {

// "n m" header, then m lines "u v" with 0-based indices. '#' lines and blank
// lines are skipped. Parallel edges and loops are kept.
Multigraph parse_graph(std::string_view text);
std::string format_graph(const Multigraph& g);

// A line starting with "walk:" if present, else the first content line.
TspWalk parse_walk(const Multigraph& g, std::string_view text);

std::string read_file(const std::string& path);

}  // namespace tspwalk
