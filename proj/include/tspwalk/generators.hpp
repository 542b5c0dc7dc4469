#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "tspwalk/multigraph.hpp"

namespace tspwalk {

// splitmix64 stream; identical output on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [0, 1) with 53 bits.
  double unit();

 private:
  std::uint64_t state_;
};

// Hubs 0 and 1 joined by three paths of k degree-2 vertices each.
Multigraph theta(std::size_t k);

Multigraph cycle(std::size_t n);

// Replaces degree-2 vertex v by a 4-cycle d1 d2 d3 d4; v's smaller neighbour
// attaches to d1 and the larger one to d3. Other vertices keep their relative
// order and the new ones come last.
Multigraph diamond_op(const Multigraph& h, Vertex v);

// K23 followed by `steps` diamond operations at seeded degree-2 vertices.
Multigraph k23_constructible(std::size_t steps, std::uint64_t seed);

struct RandomGraphOptions {
  // Chance that each candidate chord between degree-2 vertices is added.
  double chord_probability = 0.5;
  // Start from a cycle through all vertices instead of growing by ears.
  bool hamiltonian_start = false;
};

// Simple 2-connected subcubic graph: a seeded cycle grown by ears, then chords.
Multigraph random_two_connected_subcubic(std::size_t n, std::uint64_t seed,
                                         RandomGraphOptions options = {});

// K4, K23, diamond, petersen, prism, cube (case-insensitive).
Multigraph named(std::string_view name);

}  // namespace tspwalk
