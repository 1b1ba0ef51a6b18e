#include "rguard/error.hpp"

namespace rguard {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OddVertexCount: return "OddVertexCount";
    case ErrorCode::NonAlternatingEdges: return "NonAlternatingEdges";
    case ErrorCode::SelfIntersection: return "SelfIntersection";
    case ErrorCode::ZeroLengthEdge: return "ZeroLengthEdge";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::PointOutsidePolygon: return "PointOutsidePolygon";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::NotXMonotone: return "NotXMonotone";
    case ErrorCode::NotHistogram: return "NotHistogram";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::NotOrthoconvex: return "NotOrthoconvex";
    case ErrorCode::NoHorizontalSpanner: return "NoHorizontalSpanner";
    case ErrorCode::NoVerticalSpanner: return "NoVerticalSpanner";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NoSolutionWithinLimit: return "NoSolutionWithinLimit";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

bool is_class_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotXMonotone:
    case ErrorCode::NotHistogram:
    case ErrorCode::NotBalanced:
    case ErrorCode::NotOrthoconvex:
    case ErrorCode::NoHorizontalSpanner:
    case ErrorCode::NoVerticalSpanner:
    case ErrorCode::CapExceeded:
      return true;
    default:
      return false;
  }
}

static std::string compose(ErrorCode code, const std::string& message,
                           std::optional<std::size_t> index) {
  std::string out(to_string(code));
  if (index) out += " at index " + std::to_string(*index);
  if (!message.empty()) out += ": " + message;
  return out;
}

Error::Error(ErrorCode code, std::string message,
             std::optional<std::size_t> index)
    : std::runtime_error(compose(code, message, index)),
      code_(code),
      index_(index) {}

}  // namespace rguard
