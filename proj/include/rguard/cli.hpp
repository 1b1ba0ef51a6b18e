#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rguard/geometry.hpp"
#include "rguard/guard.hpp"

namespace rguard::cli {

/// Runs one command line (without the program name). Documents go to `out`,
/// single-line diagnostics to `err`. Exit codes: 0 ok, 1 invalid input,
/// 2 verification failed, 3 polygon class unsupported by the command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// {"vertices": [[x, y], ...]} in user coordinates.
std::string polygon_document(std::span<const Point> user_vertices);

/// Parses a polygon document into user-coordinate vertices. Throws
/// std::invalid_argument on malformed documents.
std::vector<Point> parse_polygon_document(std::string_view text);

/// Serializes a report in user coordinates, halves written as .5.
std::string guard_document(const GuardReport& report, std::string_view algorithm);

/// Guard points of a guard document in half-units. Throws
/// std::invalid_argument when a coordinate is not a multiple of 0.5.
std::vector<Point> parse_guard_points(std::string_view text);

}  // namespace rguard::cli
