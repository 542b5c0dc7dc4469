#include "tspwalk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "tspwalk/approx.hpp"
#include "tspwalk/error.hpp"
#include "tspwalk/generators.hpp"
#include "tspwalk/graph_io.hpp"
#include "tspwalk/oracle.hpp"
#include "tspwalk/walk.hpp"

namespace tspwalk {
namespace {

struct Exit {
  int code;
  std::string message;
};

int code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParseError:
    case ErrorKind::kUnknownName:
    case ErrorKind::kBadInput:
    case ErrorKind::kIndexOutOfRange:
      return 2;
    case ErrorKind::kTooLarge:
      return 4;
    case ErrorKind::kNotClosed:
    case ErrorKind::kNotSpanning:
    case ErrorKind::kMissingEdge:
      return 5;
    default:
      return 1;
  }
}

void require_solvable(const Multigraph& g) {
  if (g.vertex_count() < 3) throw Exit{3, "graph needs at least 3 vertices"};
  if (!g.is_simple()) throw Exit{3, "graph is not simple"};
  if (!g.is_subcubic()) throw Exit{3, "graph is not subcubic"};
  if (connectivity_class(g) != ConnectivityClass::kTwoConnected) {
    throw Exit{3, "graph is not 2-connected"};
  }
}

void require_oracle_input(const Multigraph& g) {
  const ConnectivityClass c = connectivity_class(g);
  if (c == ConnectivityClass::kDisconnected) throw Exit{3, "graph is disconnected"};
  if (c == ConnectivityClass::kHasCutVertex) throw Exit{3, "graph is not 2-connected"};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 2) throw Exit{3, "graph is not 2-connected"};
  }
}

// q / 4 as a short decimal.
std::string quarters_text(long long q) {
  std::string s = std::to_string(q / 4);
  switch (q % 4) {
    case 1: return s + ".25";
    case 2: return s + ".5";
    case 3: return s + ".75";
    default: return s;
  }
}

void cmd_solve(const std::string& path, const std::string& walk_out, std::ostream& out) {
  const Multigraph g = parse_graph(read_file(path));
  require_solvable(g);
  const EvenCover f = solve(g);
  const TspWalk w = cover_to_walk(g, f);
  const std::size_t len = validate_walk(g, w);
  const DegreeProfile p = degree_profile(g);
  const long long q = 5LL * static_cast<long long>(p.n) + static_cast<long long>(p.n2) - 4;
  out << format_cover(g, f);
  out << "walk: " << format_walk(g, w) << '\n';
  out << "n=" << p.n << " n2=" << p.n2 << " exc=" << f.excess() << " walk_len=" << len
      << " bound=" << q / 4 << " bound_exact=" << quarters_text(q) << '\n';
  if (!walk_out.empty()) {
    std::ofstream file(walk_out);
    if (!file) throw Exit{2, "cannot write " + walk_out};
    file << format_walk(g, w) << '\n';
  }
}

std::size_t oracle_limit() {
  const char* env = std::getenv("ORACLE_LIMIT");
  if (!env || !*env) return kDefaultOracleLimit;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw Exit{2, "ORACLE_LIMIT must be a number"};
  return static_cast<std::size_t>(v);
}

void cmd_oracle(const std::string& path, const std::vector<std::size_t>& edge, bool force,
                std::ostream& out) {
  const Multigraph g = parse_graph(read_file(path));
  require_oracle_input(g);
  std::optional<EdgeId> root;
  if (!edge.empty()) {
    auto a = g.find_label(static_cast<VertexLabel>(edge[0]));
    auto b = g.find_label(static_cast<VertexLabel>(edge[1]));
    if (a && b) root = g.edge_between(*a, *b);
    if (!root) throw Exit{2, "no edge between the given vertices"};
  }
  const ExactReport r = exact(g, root, OracleOptions{oracle_limit(), force});
  const DegreeProfile p = degree_profile(g);
  out << "n=" << p.n << " n2=" << p.n2 << " exc=" << r.exc << '\n';
  if (root) {
    out << "exc_with=" << (r.exc_with ? std::to_string(*r.exc_with) : "none")
        << " exc_without=" << *r.exc_without
        << " delta=" << (r.delta ? r.delta->to_string() : "none")
        << " delta_hat=" << r.delta_hat->to_string() << '\n';
  }
}

void cmd_gen(const std::string& kind, const std::string& param, std::uint64_t seed,
             const RandomGraphOptions& options, std::ostream& out) {
  auto count = [&]() -> std::size_t {
    if (param.empty()) throw Exit{2, "gen " + kind + " needs a size"};
    std::size_t v = 0;
    auto [end, ec] = std::from_chars(param.data(), param.data() + param.size(), v);
    if (ec != std::errc{} || end != param.data() + param.size()) {
      throw Exit{2, "not a count: " + param};
    }
    return v;
  };
  Multigraph g;
  if (kind == "theta") {
    g = theta(count());
  } else if (kind == "k23") {
    g = k23_constructible(count(), seed);
  } else if (kind == "random") {
    g = random_two_connected_subcubic(count(), seed, options);
  } else if (kind == "cycle") {
    g = cycle(count());
  } else if (kind == "named") {
    g = named(param);
  } else {
    throw Exit{2, "unknown generator " + kind};
  }
  out << format_graph(g);
}

void cmd_check(const std::string& graph_path, const std::string& walk_path, std::ostream& out) {
  const Multigraph g = parse_graph(read_file(graph_path));
  const TspWalk w = parse_walk(g, read_file(walk_path));
  out << validate_walk(g, w) << '\n';
}

void cmd_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed, std::size_t reps,
               std::ostream& out) {
  for (const BenchRow& row : run_bench(sizes, seed, reps)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", row.seconds * 1000.0);
    out << "n=" << row.n << " ms=" << buf << '\n';
  }
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                std::size_t repetitions) {
  std::vector<BenchRow> rows;
  for (std::size_t size : sizes) {
    const std::size_t steps = size > 5 ? (size - 5 + 1) / 3 : 0;
    const Multigraph g = k23_constructible(steps, seed);
    double best = 0;
    for (std::size_t r = 0; r < std::max<std::size_t>(repetitions, 1); ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const EvenCover f = solve(g);
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (r == 0 || s < best) best = s;
      (void)f;
    }
    rows.push_back({g.vertex_count(), best});
  }
  return rows;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Short closed spanning walks in 2-connected subcubic graphs", "tspwalk"};
  app.require_subcommand(1);

  std::string path, walk_out, graph_path, walk_path, kind, param;
  std::vector<std::size_t> edge, sizes{100, 200, 400, 800, 1600};
  bool force = false;
  std::uint64_t seed = 1;
  std::size_t reps = 3;
  RandomGraphOptions random_options;

  auto* solve_cmd = app.add_subcommand("solve", "Cover, walk and certificate for a graph file");
  solve_cmd->add_option("graph", path, "Graph file")->required();
  solve_cmd->add_option("--walk-out", walk_out, "Also write the walk to this file");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact excess by enumeration");
  oracle_cmd->add_option("graph", path, "Graph file")->required();
  oracle_cmd->add_option("--edge", edge, "Root edge as two vertex ids")->expected(2);
  oracle_cmd->add_flag("--force", force, "Ignore the size limit");

  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph file");
  gen_cmd->add_option("kind", kind, "theta | k23 | random | cycle | named")->required();
  gen_cmd->add_option("param", param, "Size, steps or graph name");
  gen_cmd->add_option("--seed", seed, "Seed for k23 and random");
  gen_cmd->add_option("--chord-probability", random_options.chord_probability,
                      "random: chance of each chord");
  gen_cmd->add_flag("--hamiltonian", random_options.hamiltonian_start,
                    "random: start from a spanning cycle");

  auto* check_cmd = app.add_subcommand("check", "Validate a walk and print its length");
  check_cmd->add_option("graph", graph_path, "Graph file")->required();
  check_cmd->add_option("walk", walk_path, "Walk file or solve output")->required();

  auto* bench_cmd = app.add_subcommand("bench", "Solve timings on K23-constructible graphs");
  bench_cmd->add_option("--sizes", sizes, "Comma-separated sizes")->delimiter(',');
  bench_cmd->add_option("--seed", seed, "Generator seed");
  bench_cmd->add_option("--reps", reps, "Repetitions per size");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*solve_cmd) cmd_solve(path, walk_out, out);
    if (*oracle_cmd) cmd_oracle(path, edge, force, out);
    if (*gen_cmd) cmd_gen(kind, param, seed, random_options, out);
    if (*check_cmd) cmd_check(graph_path, walk_path, out);
    if (*bench_cmd) cmd_bench(sizes, seed, reps, out);
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return code_for(e.kind());
  }
  return 0;
}

}  // namespace tspwalk
