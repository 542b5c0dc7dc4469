#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tspwalk {

// Exit codes: 0 ok, 1 internal, 2 parse/usage, 3 unsupported graph,
// 4 oracle size limit, 5 walk rejected.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchRow {
  std::size_t n = 0;
  double seconds = 0;
};

// Minimum solve time over `repetitions` on K23-constructible graphs of
// roughly each requested size.
std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                std::size_t repetitions);

}  // namespace tspwalk
