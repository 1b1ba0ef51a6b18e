#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rguard/geometry.hpp"

namespace rguard {

/// One rectangle of the vertical decomposition. Slab numbers are 1-based.
struct Slab {
  std::size_t index = 0;
  Coord x_left = 0;
  Coord x_right = 0;
  Coord y_low = 0;
  Coord y_high = 0;
  /// Polygon edges containing the slab's upper and lower sides.
  std::size_t owner_upper_edge = 0;
  std::size_t owner_lower_edge = 0;

  Coord height() const { return y_high - y_low; }
  AxisRect rect() const { return {{x_left, y_low}, {x_right, y_high}}; }
};

struct VerticalDecomposition {
  std::vector<Slab> slabs;
  MonotoneChains chains;

  std::size_t size() const { return slabs.size(); }
  const Slab& slab(std::size_t number) const { return slabs[number - 1]; }
  std::size_t first_source() const { return 1; }
  std::size_t last_source() const { return slabs.size(); }
};

/// Slabs between consecutive distinct vertical-edge x-coordinates, left to
/// right. With pairwise distinct x-coordinates there are exactly (n-2)/2.
/// Throws NotXMonotone.
VerticalDecomposition vertical_decompose(const OrthoPolygon& polygon);

enum class Variant { Basic, Modified };

/// A maximal run of slabs that admits a horizontal spanning segment.
struct BalancedPiece {
  std::size_t first = 0;  // slab numbers, inclusive
  std::size_t last = 0;
  Coord min_u = 0;
  Coord max_l = 0;
  std::optional<std::size_t> cut_slab;  // absent for the last piece
  Coord align_y = 0;

  std::size_t slab_count() const { return last - first + 1; }
};

/// Left-to-right scan cutting before the first slab whose y-extent misses
/// the running [max_l, min_u] band. Modified keeps the previous slab in the
/// closing piece only when that slab is a local height maximum; otherwise
/// it is handed to the next piece.
std::vector<BalancedPiece> balanced_decompose(const VerticalDecomposition& decomposition,
                                              Variant variant);
std::vector<BalancedPiece> balanced_decompose(const OrthoPolygon& polygon, Variant variant);

/// Horizontal segment at align_y spanning the piece.
HorizontalEdge align_segment(const VerticalDecomposition& decomposition,
                             const BalancedPiece& piece);

/// The piece as a standalone polygon closed by vertical edges at its ends.
OrthoPolygon piece_polygon(const VerticalDecomposition& decomposition,
                           const BalancedPiece& piece);

/// A maximal horizontal run of the upper profile of a pyramid.
struct ProfileRun {
  Coord x_left = 0;
  Coord x_right = 0;
  Coord y = 0;
};

struct Pyramid {
  HorizontalEdge base;
  HorizontalEdge apex_tooth;
  AxisRect basis_rect;
  std::vector<ProfileRun> profile;  // upper chain, left to right
  OrthoPolygon boundary;
};

/// Splits a bottom-based histogram by extending every dent rightward until it
/// meets the boundary. Returns dents+1 pyramids ordered by their left x; the
/// first one stands on the histogram base. Throws NotHistogram.
std::vector<Pyramid> pyramid_decompose(const OrthoPolygon& histogram);

/// Maximum-area rectangle standing on the pyramid base; ties go to the
/// leftmost, then the lowest candidate.
AxisRect basis_rectangle(const Pyramid& pyramid);

}  // namespace rguard
