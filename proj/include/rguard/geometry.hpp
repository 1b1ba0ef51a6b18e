#pragma once

// Exact orthogonal polygon representation.
//
// All library coordinates are in half-units: a user coordinate v is stored
// as 2v, so every midpoint the algorithms need (align segments, region
// centers, kernel points) stays on the integer lattice. Use from_user() /
// to_user() at the boundary.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rguard {

using Coord = std::int64_t;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

constexpr Coord kScale = 2;

constexpr Point from_user(Coord x, Coord y) { return {x * kScale, y * kScale}; }
constexpr double to_user(Coord v) { return static_cast<double>(v) / kScale; }

/// Closed axis-parallel box; lo == hi on an axis gives a segment or point.
struct AxisRect {
  Point lo;
  Point hi;

  static AxisRect spanned(Point a, Point b);

  Coord width() const { return hi.x - lo.x; }
  Coord height() const { return hi.y - lo.y; }
  bool valid() const { return lo.x <= hi.x && lo.y <= hi.y; }
  bool contains(Point p) const {
    return lo.x <= p.x && p.x <= hi.x && lo.y <= p.y && p.y <= hi.y;
  }
  bool contains(const AxisRect& r) const { return contains(r.lo) && contains(r.hi); }
  /// Midpoint; exact whenever lo and hi have the same parity per axis.
  Point center() const { return {(lo.x + hi.x) / 2, (lo.y + hi.y) / 2}; }

  friend constexpr bool operator==(const AxisRect&, const AxisRect&) = default;
};

/// Closed intersection, or nullopt when the boxes are disjoint.
std::optional<AxisRect> intersect(const AxisRect& a, const AxisRect& b);

enum class Chain { Upper, Lower };

struct HorizontalEdge {
  Point left;
  Point right;
  Chain chain = Chain::Upper;

  Coord y() const { return left.y; }
  friend constexpr bool operator==(const HorizontalEdge&, const HorizontalEdge&) = default;
};

enum class EdgeClass { Tooth, Dent, Step };

/// Sequence of abutting columns, ordered by x.
struct RectilinearRegion {
  std::vector<AxisRect> columns;

  bool empty() const { return columns.empty(); }
  bool contains(Point p) const;
};

RectilinearRegion intersect(const RectilinearRegion& region, const AxisRect& rect);

/// Validated, counterclockwise, simple orthogonal polygon in half-units.
class OrthoPolygon {
 public:
  /// Validates vertices that are already in half-units.
  static OrthoPolygon from_scaled(std::vector<Point> vertices);

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  /// Edge i runs from vertex i to vertex i+1 (cyclically).
  bool is_horizontal_edge(std::size_t i) const { return vertex(i).y == vertex(i + 1).y; }
  /// Interior angle at vertex i is pi/2.
  bool is_convex(std::size_t i) const;

  AxisRect bounding_box() const { return bbox_; }
  /// Twice the enclosed area, in half-unit squares.
  __int128 doubled_area() const { return doubled_area_; }

  /// Index of the horizontal edge with exactly these endpoints, if any.
  std::optional<std::size_t> find_horizontal_edge(Point a, Point b) const;

 private:
  OrthoPolygon() = default;

  std::vector<Point> vertices_;
  AxisRect bbox_;
  __int128 doubled_area_ = 0;
};

/// Validates user-coordinate vertices and scales them into half-units.
/// Clockwise rings are reversed; a repeated closing vertex is dropped.
OrthoPolygon validate(std::span<const Point> user_vertices);

/// Horizontal edges of an x-monotone polygon, split into its two chains and
/// ordered left to right.
struct MonotoneChains {
  std::vector<std::size_t> lower;
  std::vector<std::size_t> upper;
};

std::optional<MonotoneChains> monotone_chains(const OrthoPolygon& polygon);

HorizontalEdge horizontal_edge(const OrthoPolygon& polygon, std::size_t edge,
                               Chain chain);

EdgeClass classify_edge(const OrthoPolygon& polygon, std::size_t edge);
/// Throws NotAnEdge when e is not a horizontal edge of the polygon.
EdgeClass classify_edge(const HorizontalEdge& e, const OrthoPolygon& polygon);

struct EdgeCounts {
  std::size_t teeth = 0;
  std::size_t dents = 0;
  std::size_t steps = 0;
};

/// Counts over every horizontal edge of the polygon.
EdgeCounts count_edge_classes(const OrthoPolygon& polygon);

bool is_x_monotone(const OrthoPolygon& polygon);
bool is_y_monotone(const OrthoPolygon& polygon);
bool is_orthoconvex(const OrthoPolygon& polygon);
/// x-monotone with a single lower-chain edge (the base) at the bottom.
bool is_histogram(const OrthoPolygon& polygon);
/// Histogram whose upper chain has no dent.
bool is_pyramid(const OrthoPolygon& polygon);
/// x-monotone with a horizontal segment spanning it left to right.
bool is_balanced(const OrthoPolygon& polygon);

/// Point in the closed polygon, any orthogonal polygon. O(n).
bool contains_point(const OrthoPolygon& polygon, Point p);

}  // namespace rguard
