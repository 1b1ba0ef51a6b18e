#pragma once

#include <cstddef>
#include <vector>

#include "rguard/decompose.hpp"
#include "rguard/geometry.hpp"

namespace rguard {

struct GuardRegion {
  /// A segment on the align segment for plain guarding, a rectangle for
  /// hidden guarding.
  AxisRect shape;
  /// The one or two teeth whose shadows this region meets.
  std::vector<HorizontalEdge> source_teeth;
};

struct GuardReport {
  std::size_t m = 0;
  std::vector<GuardRegion> regions;  // left to right
  std::vector<Point> points;         // center of each region
  bool hidden = false;
  /// Hidden guarding only: regions cut back to their pyramid kernel.
  std::size_t clamps = 0;
};

/// Plain guarding of one balanced piece: a segment on the align segment under
/// every tooth of the piece, with overlapping lower/upper pairs replaced by
/// their intersection. Throws NotBalanced.
GuardReport guard_balanced(const VerticalDecomposition& decomposition,
                           const BalancedPiece& piece);
/// Treats the whole polygon as a single piece. Throws NotXMonotone, NotBalanced.
GuardReport guard_balanced(const OrthoPolygon& polygon);

/// Concatenation of guard_balanced over the balanced pieces.
GuardReport guard_monotone(const OrthoPolygon& polygon, Variant variant = Variant::Modified);
GuardReport guard_monotone(const VerticalDecomposition& decomposition, Variant variant);

/// Hidden guarding of a histogram: one rectangle per upper-chain tooth,
/// standing on the latest dent level with height epsilon (the shortest
/// vertical edge) and cut back to the tooth's pyramid kernel when it would
/// leave it. Throws NotHistogram.
GuardReport hidden_guard_histogram(const OrthoPolygon& histogram);

/// Basis rectangle intersected with the shadow of the apex tooth.
/// Throws EmptyIntersection.
AxisRect shadow_intersection(const Pyramid& pyramid);

/// Kernel of the pyramid: the apex tooth's x-range from the base up to the
/// lowest level of its upper chain.
AxisRect pyramid_kernel(const Pyramid& pyramid);

}  // namespace rguard
