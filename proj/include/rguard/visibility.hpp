#pragma once

#include <vector>

#include "rguard/decompose.hpp"
#include "rguard/geometry.hpp"

namespace rguard {

/// Containment and r-visibility queries on an x-monotone polygon, answered
/// from its slab decomposition in O(log n) after O(n) preprocessing.
class VisibilityIndex {
 public:
  /// Throws NotXMonotone.
  explicit VisibilityIndex(const OrthoPolygon& polygon);
  explicit VisibilityIndex(VerticalDecomposition decomposition);

  const VerticalDecomposition& decomposition() const { return decomposition_; }

  bool contains(Point p) const;
  /// Closed box inside the closed polygon.
  bool contains(const AxisRect& rect) const;
  /// Throws PointOutsidePolygon.
  bool r_visible(Point p, Point q) const;

 private:
  void build();
  // Range extrema over slabs [first, last] (0-based, inclusive).
  Coord min_high(std::size_t first, std::size_t last) const;
  Coord max_low(std::size_t first, std::size_t last) const;

  VerticalDecomposition decomposition_;
  std::vector<Coord> breaks_;  // slab x_left values plus the final x_right
  std::size_t leaves_ = 1;
  std::vector<Coord> min_high_tree_;
  std::vector<Coord> max_low_tree_;
};

/// The closed axis-parallel box spanned by p and q lies in the polygon.
/// Builds a VisibilityIndex per call; reuse an index for repeated queries.
bool r_visible(Point p, Point q, const OrthoPolygon& polygon);

/// Points joined to e by a vertical segment inside the polygon, as maximal
/// columns over e's x-range. Throws NotAnEdge, NotXMonotone.
RectilinearRegion orthogonal_shadow(const HorizontalEdge& e, const OrthoPolygon& polygon);

/// Crossing of the horizontal and vertical spanning segments of an
/// orthoconvex polygon; every point of the polygon is r-visible from it.
/// Throws NotOrthoconvex, NoHorizontalSpanner, NoVerticalSpanner.
Point orthoconvex_kernel_point(const OrthoPolygon& polygon);

}  // namespace rguard
