#pragma once

#include <cstddef>
#include <vector>

#include "tspwalk/cover.hpp"
#include "tspwalk/half_integer.hpp"
#include "tspwalk/multigraph.hpp"

namespace tspwalk {

// Upper estimates for the recentred excess through and avoiding the root edge.
struct DeltaPair {
  HalfInteger delta;
  HalfInteger delta_hat;

  friend bool operator==(const DeltaPair&, const DeltaPair&) = default;
};

enum class Route {
  kLoop,
  kChain,
  kParallel,
  kThetaSplit,   // estimate -1/2
  kBrickTree,    // estimate -1
  kSuppressed,   // estimate -3/2
  kAvoid,        // root edge avoided via endpoint suppression
};

struct CallRecord {
  std::size_t n = 0;
  std::size_t n2 = 0;
  DeltaPair estimate;
  bool through = true;
  Route route = Route::kLoop;
  int excess = 0;
  std::size_t depth = 0;
};

// exc(F) = sum(cyclic - 2) + sum(acyclic) + 2 * spliced for each assembly.
struct AssemblyRecord {
  Route route = Route::kLoop;
  bool through = true;
  bool spliced = false;
  std::vector<int> cyclic;
  std::vector<int> acyclic;
  int excess = 0;
};

class SolveObserver {
 public:
  virtual ~SolveObserver() = default;
  virtual void on_call(const CallRecord&) {}
  virtual void on_assembly(const AssemblyRecord&) {}
};

// Input: a loop, or a 2-connected subcubic G with G - e simple (a 2-cycle counts).
DeltaPair scan(const Multigraph& g, EdgeId e);

// through = true: a cover containing e with exc <= (n + n2)/4 + delta + 2.
// through = false: a cover avoiding e with exc <= (n + n2)/4 + delta_hat.
EvenCover algo(const Multigraph& g, EdgeId e, bool through, SolveObserver* observer = nullptr);

// Cover through e for the non-chain, non-parallel case with the given estimate.
EvenCover ec(const Multigraph& g, EdgeId e, HalfInteger delta, SolveObserver* observer = nullptr);

// Cover avoiding e for the non-chain, non-parallel case.
EvenCover bec(const Multigraph& g, EdgeId e, SolveObserver* observer = nullptr);

struct SubroutineResult {
  // 1 or 2: which of v1, v2 was joined to u.
  int index = 1;
  // Z with the joining edge appended as `added_edge`.
  DerivedGraph graph;
  EdgeId added_edge = 0;
  EvenCover cover;
};

// For a simple 2-connected subcubic Z and distinct degree-2 vertices u, v1, v2:
// a cover of Z + u v_i through u v_i with exc <= (n + n2)/4 + 1 of that graph.
SubroutineResult subroutine(const Multigraph& z, Vertex u, Vertex v1, Vertex v2,
                            SolveObserver* observer = nullptr);

// Best of the through and avoiding runs at the smallest edge id.
EvenCover solve(const Multigraph& g, SolveObserver* observer = nullptr);

// 4 * exc bounds for the two run types.
long long through_bound_quarters(const Multigraph& g, HalfInteger delta);
long long avoid_bound_quarters(const Multigraph& g, HalfInteger delta_hat);

}  // namespace tspwalk
