#include "tspwalk/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "tspwalk/error.hpp"

namespace tspwalk {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    std::size_t cut = text.find('\n');
    std::string_view line = text.substr(0, cut);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t number(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || end != tok.data() + tok.size()) {
    fail(ErrorKind::kParseError,
         "line " + std::to_string(line_no) + ": expected a number, got '" + std::string(tok) + "'");
  }
  return value;
}

bool skipped(std::string_view line) {
  auto t = tokens(line);
  return t.empty() || t.front().front() == '#';
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  const auto lines = split_lines(text);
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (skipped(lines[i])) continue;
    const auto t = tokens(lines[i]);
    if (t.size() != 2) {
      fail(ErrorKind::kParseError, "line " + std::to_string(i + 1) + ": expected two numbers");
    }
    const std::size_t a = number(t[0], i + 1);
    const std::size_t b = number(t[1], i + 1);
    if (!have_header) {
      have_header = true;
      n = a;
      m = b;
      continue;
    }
    if (a >= n || b >= n) {
      fail(ErrorKind::kParseError, "line " + std::to_string(i + 1) + ": vertex index out of range");
    }
    if (edges.size() == m) fail(ErrorKind::kParseError, "more than " + std::to_string(m) + " edges");
    edges.emplace_back(a, b);
  }
  if (!have_header) fail(ErrorKind::kParseError, "missing 'n m' header");
  if (edges.size() != m) {
    fail(ErrorKind::kParseError,
         "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Multigraph::build(n, edges);
}

std::string format_graph(const Multigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const EdgeEnds& e : g.edges()) out << g.label(e.a) << ' ' << g.label(e.b) << '\n';
  return out.str();
}

TspWalk parse_walk(const Multigraph& g, std::string_view text) {
  std::optional<std::string_view> chosen;
  std::size_t chosen_no = 0;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto t = tokens(lines[i]);
    if (!t.empty() && t.front() == "walk:") {
      chosen = lines[i].substr(lines[i].find("walk:") + 5);
      chosen_no = i + 1;
      break;
    }
    if (!chosen && !skipped(lines[i]) && t.front().back() != ':') {
      chosen = lines[i];
      chosen_no = i + 1;
    }
  }
  if (!chosen) fail(ErrorKind::kParseError, "no walk found");
  TspWalk w;
  for (std::string_view tok : tokens(*chosen)) {
    const std::size_t label = number(tok, chosen_no);
    auto v = g.find_label(static_cast<VertexLabel>(label));
    if (!v) fail(ErrorKind::kMissingEdge, "walk visits unknown vertex " + std::string(tok));
    w.vertex_sequence.push_back(*v);
  }
  w.length = w.vertex_sequence.empty() ? 0 : w.vertex_sequence.size() - 1;
  return w;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace tspwalk
