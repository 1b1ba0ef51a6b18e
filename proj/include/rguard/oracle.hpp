#pragma once

// Brute-force ground truth on the arrangement of all vertex coordinates.
//
// The lines x = xs[k] and y = ys[k] cut the bounding box into cells. Every
// point belongs to exactly one elementary piece of that arrangement: an open
// cell, an open segment of a grid line, or a grid vertex. Pieces are indexed
// on a fine grid where even positions are lines and odd positions are open
// intervals. Whether the box spanned by two points lies in the polygon depends
// only on the pieces holding the two points, which makes coverage and
// hiddenness finitely checkable. Nothing here uses the slab decomposition.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rguard/geometry.hpp"

namespace rguard::oracle {

struct GridPos {
  std::size_t x = 0;
  std::size_t y = 0;
};

class CellGrid {
 public:
  explicit CellGrid(const OrthoPolygon& polygon);

  /// Sorted distinct vertex coordinates, half-units.
  const std::vector<Coord>& xs() const { return xs_; }
  const std::vector<Coord>& ys() const { return ys_; }
  std::size_t columns() const { return xs_.size() - 1; }
  std::size_t rows() const { return ys_.size() - 1; }

  bool inside(std::size_t column, std::size_t row) const { return inside_[column * rows() + row]; }
  /// Inside cells as (column, row), ordered by column then row.
  const std::vector<GridPos>& cells() const { return cells_; }
  /// Cell centers in quarter units (four times user coordinates).
  const std::vector<Point>& centers() const { return centers_; }

  /// Fine-grid position of a half-unit point, nullopt outside the bounding box.
  std::optional<GridPos> locate(Point p) const;
  GridPos cell_pos(std::size_t cell) const {
    return {2 * cells_[cell].x + 1, 2 * cells_[cell].y + 1};
  }
  std::size_t fine_columns() const { return 2 * columns() + 1; }
  std::size_t fine_rows() const { return 2 * rows() + 1; }

  /// Piece in the closed polygon.
  bool in_polygon(GridPos g) const { return in_polygon_[g.x * fine_rows() + g.y]; }
  /// Piece in the open interior.
  bool in_interior(GridPos g) const { return in_interior_[g.x * fine_rows() + g.y]; }
  /// Representative point of a piece in quarter units.
  Point representative(GridPos g) const;

  /// Every piece between a and b (inclusive) lies in the closed polygon.
  bool box_inside(GridPos a, GridPos b) const;
  bool contains(Point p) const;
  /// Throws PointOutsidePolygon.
  bool r_visible(Point p, Point q) const;

 private:
  std::vector<Coord> xs_;
  std::vector<Coord> ys_;
  std::vector<bool> inside_;
  std::vector<GridPos> cells_;
  std::vector<Point> centers_;
  std::vector<bool> in_polygon_;
  std::vector<bool> in_interior_;
  std::vector<std::uint32_t> outside_prefix_;  // (fine_columns+1) x (fine_rows+1)
};

CellGrid build_cells(const OrthoPolygon& polygon);

/// Square matrix over inside cells: entry (a, b) is r-visibility of centers.
struct VisibilityMatrix {
  std::size_t size = 0;
  std::vector<bool> entries;
  bool at(std::size_t a, std::size_t b) const { return entries[a * size + b]; }
};

VisibilityMatrix visibility_matrix(const CellGrid& grid);

struct CoverResult {
  bool covered = false;
  std::vector<std::size_t> uncovered;  // indices into CellGrid::cells()
};

/// Throws PointOutsidePolygon. Points are in half-units.
CoverResult verify_cover(std::span<const Point> points, const OrthoPolygon& polygon);
CoverResult verify_cover(std::span<const Point> points, const CellGrid& grid);

struct HiddenResult {
  bool hidden = false;
  std::optional<std::pair<std::size_t, std::size_t>> offending;  // point indices
};

/// Throws PointOutsidePolygon.
HiddenResult verify_hidden(std::span<const Point> points, const OrthoPolygon& polygon);
HiddenResult verify_hidden(std::span<const Point> points, const CellGrid& grid);

struct SearchOptions {
  std::size_t limit = 16;
  std::size_t cap = 64;  // maximum number of inside cells
};

struct SearchResult {
  std::size_t count = 0;
  std::vector<Point> guards;  // quarter units
};

/// Smallest guard set over every piece of the closed polygon.
/// Throws CapExceeded, NoSolutionWithinLimit.
SearchResult solve_min_guards(const OrthoPolygon& polygon, SearchOptions options = {});
/// Smallest pairwise invisible guard set over interior pieces.
SearchResult solve_min_hidden_guards(const OrthoPolygon& polygon, SearchOptions options = {});

std::size_t min_guards_bruteforce(const OrthoPolygon& polygon, std::size_t limit = 16);
std::size_t min_hidden_guards_bruteforce(const OrthoPolygon& polygon, std::size_t limit = 16);

}  // namespace rguard::oracle
