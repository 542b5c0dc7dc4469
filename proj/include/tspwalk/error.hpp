#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tspwalk {

enum class ErrorKind {
  kIndexOutOfRange,
  kDisconnected,
  kBadNeighborhood,
  kNotAChainCase,
  kTrivialChain,
  kBadPrecondition,
  kDegreeViolation,
  kEdgeNotInCycle,
  kNotACycle,
  kOverlap,
  kBadInput,
  kInvalidCover,
  kNotClosed,
  kNotSpanning,
  kMissingEdge,
  kTooLarge,
  kBadDegree,
  kUnknownName,
  kParseError,
  // A decomposition or bound assertion failed inside the recursion.
  kInternal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace tspwalk
