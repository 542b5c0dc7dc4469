#include "tspwalk/oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include "tspwalk/chains.hpp"
#include "tspwalk/error.hpp"

namespace tspwalk {
namespace {

constexpr int kUnset = std::numeric_limits<int>::max();

// Depth-first search over edge membership. Edges are visited in breadth-first
// discovery order so vertices complete early and parity failures cut whole
// subtrees.
class Enumerator {
 public:
  explicit Enumerator(const Multigraph& g) : g_(g), deg_(g.vertex_count(), 0) {
    const std::size_t n = g.vertex_count();
    std::vector<char> seen_v(n, 0);
    std::vector<char> seen_e(g.edge_count(), 0);
    std::vector<Vertex> queue{0};
    seen_v[0] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (EdgeId e : g.incident(queue[h])) {
        if (seen_e[e]) continue;
        seen_e[e] = 1;
        order_.push_back(e);
        Vertex w = g.ends(e).other(queue[h]);
        if (!seen_v[w]) {
          seen_v[w] = 1;
          queue.push_back(w);
        }
      }
    }
    last_.assign(n, std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < order_.size(); ++i) {
      last_[g.ends(order_[i]).a] = i;
      last_[g.ends(order_[i]).b] = i;
    }
  }

  template <typename Visit>
  void run(Visit&& visit) {
    in_.assign(g_.edge_count(), 0);
    chosen_.clear();
    step(0, visit);
  }

  const std::vector<char>& membership() const { return in_; }
  const std::vector<EdgeId>& chosen() const { return chosen_; }

  int excess() const {
    // Cycles = chosen edges that close a cycle in a union-find pass.
    const std::size_t n = g_.vertex_count();
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int cycles = 0;
    int covered = 0;
    for (EdgeId e : chosen_) {
      Vertex a = find(g_.ends(e).a);
      Vertex b = find(g_.ends(e).b);
      if (a == b) {
        ++cycles;
      } else {
        parent[a] = b;
      }
    }
    for (Vertex v = 0; v < n; ++v) covered += deg_[v] == 2;
    return 2 * cycles + static_cast<int>(n) - covered;
  }

 private:
  bool complete_ok(EdgeId e, std::size_t pos) const {
    const EdgeEnds& ends = g_.ends(e);
    for (Vertex w : {ends.a, ends.b}) {
      if (last_[w] == pos && deg_[w] == 1) return false;
    }
    return true;
  }

  template <typename Visit>
  void step(std::size_t pos, Visit& visit) {
    if (pos == order_.size()) {
      visit(*this);
      return;
    }
    const EdgeId e = order_[pos];
    const EdgeEnds& ends = g_.ends(e);
    if (complete_ok(e, pos)) step(pos + 1, visit);

    const bool fits = ends.is_loop() ? deg_[ends.a] == 0 : deg_[ends.a] < 2 && deg_[ends.b] < 2;
    if (!fits) return;
    deg_[ends.a] += 1;
    deg_[ends.b] += 1;
    in_[e] = 1;
    chosen_.push_back(e);
    if (complete_ok(e, pos)) step(pos + 1, visit);
    chosen_.pop_back();
    in_[e] = 0;
    deg_[ends.a] -= 1;
    deg_[ends.b] -= 1;
  }

  const Multigraph& g_;
  std::vector<EdgeId> order_;
  std::vector<std::size_t> last_;
  std::vector<int> deg_;
  std::vector<char> in_;
  std::vector<EdgeId> chosen_;
};

void check_size(const Multigraph& g, const OracleOptions& options) {
  if (g.vertex_count() == 0) fail(ErrorKind::kBadInput, "empty graph");
  if (!options.force && g.vertex_count() > options.limit) {
    fail(ErrorKind::kTooLarge, std::to_string(g.vertex_count()) + " vertices exceed the limit of " +
                                   std::to_string(options.limit));
  }
  if (!is_connected(g)) fail(ErrorKind::kDisconnected, "oracle needs a connected graph");
}

HalfInteger recentre(const Multigraph& g, int exc) {
  const DegreeProfile p = degree_profile(g);
  return HalfInteger::from_quarters(4LL * exc - static_cast<long long>(p.n + p.n2));
}

}  // namespace

ExactReport exact(const Multigraph& g, std::optional<EdgeId> e, OracleOptions options) {
  check_size(g, options);
  if (e && *e >= g.edge_count()) fail(ErrorKind::kIndexOutOfRange, "root edge out of range");

  int best = kUnset, with = kUnset, without = kUnset;
  std::vector<EdgeId> best_f, with_f, without_f;
  Enumerator en(g);
  en.run([&](const Enumerator& s) {
    const int x = s.excess();
    if (x < best) {
      best = x;
      best_f = s.chosen();
    }
    if (!e) return;
    if (s.membership()[*e]) {
      if (x < with) {
        with = x;
        with_f = s.chosen();
      }
    } else if (x < without) {
      without = x;
      without_f = s.chosen();
    }
  });

  ExactReport r;
  r.exc = best;
  r.best = validate(g, best_f);
  if (e) {
    if (with != kUnset) {
      r.exc_with = with - 2;
      r.delta = recentre(g, with - 2);
      r.best_with = validate(g, with_f);
    }
    r.exc_without = without;
    r.delta_hat = recentre(g, without);
    r.best_without = validate(g, without_f);
  }
  return r;
}

ExactTable exact_all_edges(const Multigraph& g, OracleOptions options) {
  check_size(g, options);
  const std::size_t m = g.edge_count();
  ExactTable t;
  t.exc = kUnset;
  std::vector<int> with(m, kUnset);
  t.exc_without.assign(m, kUnset);
  Enumerator en(g);
  en.run([&](const Enumerator& s) {
    const int x = s.excess();
    t.exc = std::min(t.exc, x);
    const auto& in = s.membership();
    for (EdgeId f = 0; f < m; ++f) {
      int& slot = in[f] ? with[f] : t.exc_without[f];
      slot = std::min(slot, x);
    }
  });
  t.exc_with.resize(m);
  for (EdgeId f = 0; f < m; ++f) {
    if (with[f] != kUnset) t.exc_with[f] = with[f] - 2;
  }
  return t;
}

namespace {

struct ClosureDeltas {
  HalfInteger delta;
  HalfInteger delta_hat;
};

ClosureDeltas closure_deltas(const Multigraph& host, const SubcubicChain& c,
                             const OracleOptions& options) {
  ChainClosure cl = closure(host, c);
  ExactReport r = exact(cl.graph.graph, cl.root, options);
  if (!r.delta) fail(ErrorKind::kInternal, "chain closure has no cover through its root");
  return {*r.delta, *r.delta_hat};
}

}  // namespace

ClassifyFlags classify(const Multigraph& g, EdgeId e, OracleOptions options) {
  ExactReport r = exact(g, e, options);
  ClassifyFlags flags;
  flags.is_loop = g.is_loop_graph();
  flags.tight = r.delta && *r.delta + *r.delta_hat == HalfInteger{};
  if (g.ends(e).is_loop()) return flags;

  ClosureDeltas c1{}, c2{};
  if (g.parallel_to(e)) {
    // The twin is a trivial chain with closure values (0, 0); the rest of G is
    // the other chain when both ends have a third neighbour, and its closure is
    // G with {u, v} suppressed.
    const auto [u, v] = ordered_ends(g, e);
    if (g.degree(u) != 3 || g.degree(v) != 3) return flags;
    const std::array<Vertex, 2> ends{u, v};
    const Suppression s = suppress(g, ends);
    const ExactReport rest = exact(s.derived.graph, s.new_edge, options);
    if (!rest.delta) fail(ErrorKind::kInternal, "chain closure has no cover through its root");
    c2 = {*rest.delta, *rest.delta_hat};
  } else {
    auto split = rooted_theta_split(g, e);
    if (!split) return flags;
    c1 = closure_deltas(g, split->first, options);
    c2 = closure_deltas(g, split->second, options);
  }
  flags.is_rooted_theta = true;
  const HalfInteger zero{};
  const bool t1 = c1.delta + c1.delta_hat == zero;
  const bool t2 = c2.delta + c2.delta_hat == zero;
  flags.chains_tight = t1 && t2;
  flags.balanced = c1.delta == c2.delta;
  const HalfInteger minus_half = HalfInteger::from_twice(-1);
  flags.minimal = t1 && t2 && c1.delta == minus_half && c2.delta == minus_half;
  return flags;
}

}  // namespace tspwalk
