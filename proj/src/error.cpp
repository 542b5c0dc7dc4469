#include "tspwalk/error.hpp"

namespace tspwalk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kDisconnected: return "Disconnected";
    case ErrorKind::kBadNeighborhood: return "BadNeighborhood";
    case ErrorKind::kNotAChainCase: return "NotAChainCase";
    case ErrorKind::kTrivialChain: return "TrivialChain";
    case ErrorKind::kBadPrecondition: return "BadPrecondition";
    case ErrorKind::kDegreeViolation: return "DegreeViolation";
    case ErrorKind::kEdgeNotInCycle: return "EdgeNotInCycle";
    case ErrorKind::kNotACycle: return "NotACycle";
    case ErrorKind::kOverlap: return "Overlap";
    case ErrorKind::kBadInput: return "BadInput";
    case ErrorKind::kInvalidCover: return "InvalidCover";
    case ErrorKind::kNotClosed: return "NotClosed";
    case ErrorKind::kNotSpanning: return "NotSpanning";
    case ErrorKind::kMissingEdge: return "MissingEdge";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kBadDegree: return "BadDegree";
    case ErrorKind::kUnknownName: return "UnknownName";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kInternal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace tspwalk
