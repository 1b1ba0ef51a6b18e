#include "rguard/guard.hpp"

#include <algorithm>
#include <limits>

#include "rguard/error.hpp"
#include "rguard/visibility.hpp"

namespace rguard {

namespace {

struct Run {
  Coord x_left;
  Coord x_right;
  Coord y;
};

// Maximal equal-y runs of one chain of a piece, left to right.
template <typename YOf>
std::vector<Run> chain_runs(const VerticalDecomposition& d, const BalancedPiece& piece,
                            YOf y_of) {
  std::vector<Run> runs;
  for (std::size_t n = piece.first; n <= piece.last; ++n) {
    const Slab& s = d.slab(n);
    Coord y = y_of(s);
    if (!runs.empty() && runs.back().y == y) {
      runs.back().x_right = s.x_right;
    } else {
      runs.push_back({s.x_left, s.x_right, y});
    }
  }
  return runs;
}

// A run is a tooth when both neighbours lie on the exterior side; the piece
// ends count as convex corners.
std::vector<HorizontalEdge> teeth(const std::vector<Run>& runs, Chain chain) {
  std::vector<HorizontalEdge> out;
  auto away = [&](Coord neighbour, Coord y) {
    return chain == Chain::Upper ? neighbour < y : neighbour > y;
  };
  for (std::size_t i = 0; i < runs.size(); ++i) {
    bool left = i == 0 || away(runs[i - 1].y, runs[i].y);
    bool right = i + 1 == runs.size() || away(runs[i + 1].y, runs[i].y);
    if (left && right)
      out.push_back({{runs[i].x_left, runs[i].y}, {runs[i].x_right, runs[i].y}, chain});
  }
  return out;
}

void append(GuardReport& into, GuardReport&& from) {
  into.m += from.m;
  for (auto& r : from.regions) into.regions.push_back(std::move(r));
  for (auto& p : from.points) into.points.push_back(p);
  into.clamps += from.clamps;
}

}  // namespace

GuardReport guard_balanced(const VerticalDecomposition& d, const BalancedPiece& piece) {
  Coord min_u = std::numeric_limits<Coord>::max();
  Coord max_l = std::numeric_limits<Coord>::min();
  for (std::size_t n = piece.first; n <= piece.last; ++n) {
    min_u = std::min(min_u, d.slab(n).y_high);
    max_l = std::max(max_l, d.slab(n).y_low);
  }
  if (max_l > min_u) throw Error(ErrorCode::NotBalanced, "guard_balanced");
  const Coord y = piece.align_y;

  const auto lower = teeth(chain_runs(d, piece, [](const Slab& s) { return s.y_low; }),
                           Chain::Lower);
  const auto upper = teeth(chain_runs(d, piece, [](const Slab& s) { return s.y_high; }),
                           Chain::Upper);

  // Merge the two sorted lists; on equal left ends the lower tooth goes first.
  std::vector<GuardRegion> segments;
  segments.reserve(lower.size() + upper.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lower.size() || j < upper.size()) {
    bool take_lower =
        j == upper.size() || (i < lower.size() && lower[i].left.x <= upper[j].left.x);
    const HorizontalEdge& t = take_lower ? lower[i++] : upper[j++];
    segments.push_back({{{t.left.x, y}, {t.right.x, y}}, {t}});
  }

  GuardReport report;
  for (std::size_t k = 0; k < segments.size();) {
    if (k + 1 < segments.size()) {
      if (auto common = intersect(segments[k].shape, segments[k + 1].shape)) {
        GuardRegion merged{*common, segments[k].source_teeth};
        merged.source_teeth.push_back(segments[k + 1].source_teeth.front());
        report.regions.push_back(std::move(merged));
        k += 2;
        continue;
      }
    }
    report.regions.push_back(std::move(segments[k]));
    k += 1;
  }
  report.m = report.regions.size();
  for (const auto& r : report.regions) report.points.push_back(r.shape.center());
  return report;
}

GuardReport guard_balanced(const OrthoPolygon& polygon) {
  const auto d = vertical_decompose(polygon);
  BalancedPiece whole;
  whole.first = 1;
  whole.last = d.size();
  whole.min_u = std::numeric_limits<Coord>::max();
  whole.max_l = std::numeric_limits<Coord>::min();
  for (const auto& s : d.slabs) {
    whole.min_u = std::min(whole.min_u, s.y_high);
    whole.max_l = std::max(whole.max_l, s.y_low);
  }
  if (whole.max_l > whole.min_u) throw Error(ErrorCode::NotBalanced, "guard_balanced");
  whole.align_y = whole.max_l + (whole.min_u - whole.max_l) / 2;
  return guard_balanced(d, whole);
}

GuardReport guard_monotone(const VerticalDecomposition& d, Variant variant) {
  GuardReport report;
  for (const auto& piece : balanced_decompose(d, variant)) append(report, guard_balanced(d, piece));
  return report;
}

GuardReport guard_monotone(const OrthoPolygon& polygon, Variant variant) {
  return guard_monotone(vertical_decompose(polygon), variant);
}

AxisRect pyramid_kernel(const Pyramid& pyramid) {
  Coord lowest = pyramid.profile.front().y;
  for (const auto& run : pyramid.profile) lowest = std::min(lowest, run.y);
  return {{pyramid.apex_tooth.left.x, pyramid.base.y()},
          {pyramid.apex_tooth.right.x, lowest}};
}

AxisRect shadow_intersection(const Pyramid& pyramid) {
  const auto shadow = orthogonal_shadow(pyramid.apex_tooth, pyramid.boundary);
  const auto common = intersect(shadow, pyramid.basis_rect);
  if (common.columns.size() != 1)
    throw Error(ErrorCode::EmptyIntersection, "basis rectangle misses the apex shadow");
  return common.columns.front();
}

GuardReport hidden_guard_histogram(const OrthoPolygon& histogram) {
  if (!is_histogram(histogram)) throw Error(ErrorCode::NotHistogram, "hidden guarding");
  const auto chains = *monotone_chains(histogram);
  const auto pyramids = pyramid_decompose(histogram);

  Coord epsilon = std::numeric_limits<Coord>::max();
  for (std::size_t i = 0; i < histogram.size(); ++i) {
    if (histogram.is_horizontal_edge(i)) continue;
    epsilon = std::min(epsilon, std::abs(histogram.vertex(i + 1).y - histogram.vertex(i).y));
  }

  GuardReport report;
  report.hidden = true;
  Coord y1 = histogram.vertex(chains.lower.front()).y;
  std::size_t tooth_no = 0;
  for (auto e : chains.upper) {
    const EdgeClass cls = classify_edge(histogram, e);
    const HorizontalEdge edge = horizontal_edge(histogram, e, Chain::Upper);
    if (cls == EdgeClass::Dent) {
      y1 = edge.y();
    } else if (cls == EdgeClass::Tooth) {
      AxisRect strip{{edge.left.x, y1}, {edge.right.x, y1 + epsilon}};
      const AxisRect kernel = pyramid_kernel(pyramids.at(tooth_no));
      auto region = intersect(strip, kernel);
      if (!region || region->height() == 0)
        throw Error(ErrorCode::EmptyIntersection, "strip misses the pyramid kernel", e);
      if (*region != strip) ++report.clamps;
      report.regions.push_back({*region, {edge}});
      report.points.push_back(region->center());
      ++tooth_no;
    }
  }
  report.m = report.regions.size();
  return report;
}

}  // namespace rguard
