#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tspwalk/cover.hpp"
#include "tspwalk/half_integer.hpp"
#include "tspwalk/multigraph.hpp"

namespace tspwalk {

inline constexpr std::size_t kDefaultOracleLimit = 16;

struct OracleOptions {
  std::size_t limit = kDefaultOracleLimit;
  bool force = false;
};

struct ExactReport {
  int exc = 0;
  // With a root edge only. exc_with uses the -2 convention and is absent when
  // no even cover uses the root.
  std::optional<int> exc_with;
  std::optional<int> exc_without;
  std::optional<HalfInteger> delta;
  std::optional<HalfInteger> delta_hat;
  EvenCover best;
  std::optional<EvenCover> best_with;
  std::optional<EvenCover> best_without;
};

// Exhaustive minimum over all even covers. Connected input, loops and parallel
// edges allowed.
ExactReport exact(const Multigraph& g, std::optional<EdgeId> e = std::nullopt,
                  OracleOptions options = {});

// Per-edge minima from one enumeration.
struct ExactTable {
  int exc = 0;
  std::vector<std::optional<int>> exc_with;  // -2 convention
  std::vector<int> exc_without;
};

ExactTable exact_all_edges(const Multigraph& g, OracleOptions options = {});

struct ClassifyFlags {
  bool is_loop = false;
  // G - e splits into two chains between the ends of e. A parallel root gives a
  // trivial chain.
  bool is_rooted_theta = false;
  bool tight = false;
  // Chain-level flags, present for rooted thetas only. A trivial chain counts
  // with closure values (0, 0).
  std::optional<bool> chains_tight;
  std::optional<bool> balanced;
  std::optional<bool> minimal;
};

ClassifyFlags classify(const Multigraph& g, EdgeId e, OracleOptions options = {});

}  // namespace tspwalk
