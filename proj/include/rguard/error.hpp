#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rguard {

enum class ErrorCode {
  // Malformed input polygons.
  OddVertexCount,
  NonAlternatingEdges,
  SelfIntersection,
  ZeroLengthEdge,
  EmptyInput,
  // Queries against a polygon.
  PointOutsidePolygon,
  NotAnEdge,
  // Polygon class gates.
  NotXMonotone,
  NotHistogram,
  NotBalanced,
  NotOrthoconvex,
  NoHorizontalSpanner,
  NoVerticalSpanner,
  EmptyIntersection,
  // Oracle limits.
  CapExceeded,
  NoSolutionWithinLimit,
  // Generator.
  InvalidSpec,
};

std::string_view to_string(ErrorCode code);

/// True for codes that mean "valid polygon, wrong class for this operation".
bool is_class_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  /// Offending vertex or edge index, when the error names one.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace rguard
