#include "rguard/visibility.hpp"

#include <algorithm>
#include <limits>

#include "rguard/error.hpp"

namespace rguard {

VisibilityIndex::VisibilityIndex(const OrthoPolygon& polygon)
    : decomposition_(vertical_decompose(polygon)) {
  build();
}

VisibilityIndex::VisibilityIndex(VerticalDecomposition decomposition)
    : decomposition_(std::move(decomposition)) {
  build();
}

void VisibilityIndex::build() {
  const auto& s = decomposition_.slabs;
  breaks_.reserve(s.size() + 1);
  for (const auto& slab : s) breaks_.push_back(slab.x_left);
  breaks_.push_back(s.back().x_right);

  while (leaves_ < s.size()) leaves_ *= 2;
  min_high_tree_.assign(2 * leaves_, std::numeric_limits<Coord>::max());
  max_low_tree_.assign(2 * leaves_, std::numeric_limits<Coord>::min());
  for (std::size_t i = 0; i < s.size(); ++i) {
    min_high_tree_[leaves_ + i] = s[i].y_high;
    max_low_tree_[leaves_ + i] = s[i].y_low;
  }
  for (std::size_t i = leaves_ - 1; i > 0; --i) {
    min_high_tree_[i] = std::min(min_high_tree_[2 * i], min_high_tree_[2 * i + 1]);
    max_low_tree_[i] = std::max(max_low_tree_[2 * i], max_low_tree_[2 * i + 1]);
  }
}

Coord VisibilityIndex::min_high(std::size_t first, std::size_t last) const {
  Coord out = std::numeric_limits<Coord>::max();
  for (std::size_t l = first + leaves_, r = last + leaves_ + 1; l < r; l /= 2, r /= 2) {
    if (l & 1) out = std::min(out, min_high_tree_[l++]);
    if (r & 1) out = std::min(out, min_high_tree_[--r]);
  }
  return out;
}

Coord VisibilityIndex::max_low(std::size_t first, std::size_t last) const {
  Coord out = std::numeric_limits<Coord>::min();
  for (std::size_t l = first + leaves_, r = last + leaves_ + 1; l < r; l /= 2, r /= 2) {
    if (l & 1) out = std::max(out, max_low_tree_[l++]);
    if (r & 1) out = std::max(out, max_low_tree_[--r]);
  }
  return out;
}

bool VisibilityIndex::contains(const AxisRect& rect) const {
  const auto& s = decomposition_.slabs;
  const std::size_t k = s.size();
  if (rect.lo.x < breaks_.front() || rect.hi.x > breaks_.back()) return false;

  if (rect.lo.x == rect.hi.x) {
    const Coord x = rect.lo.x;
    std::size_t idx = static_cast<std::size_t>(
        std::upper_bound(breaks_.begin(), breaks_.end(), x) - breaks_.begin() - 1);
    Coord low;
    Coord high;
    if (idx == k) {
      low = s[k - 1].y_low;
      high = s[k - 1].y_high;
    } else if (x == breaks_[idx] && idx > 0) {
      // On a shared vertical boundary the cross-section joins both slabs.
      low = std::min(s[idx - 1].y_low, s[idx].y_low);
      high = std::max(s[idx - 1].y_high, s[idx].y_high);
    } else {
      low = s[idx].y_low;
      high = s[idx].y_high;
    }
    return low <= rect.lo.y && rect.hi.y <= high;
  }

  std::size_t first = static_cast<std::size_t>(
      std::upper_bound(breaks_.begin(), breaks_.end(), rect.lo.x) - breaks_.begin() - 1);
  std::size_t last = static_cast<std::size_t>(
      std::lower_bound(breaks_.begin(), breaks_.end(), rect.hi.x) - breaks_.begin() - 1);
  return max_low(first, last) <= rect.lo.y && rect.hi.y <= min_high(first, last);
}

bool VisibilityIndex::contains(Point p) const { return contains(AxisRect{p, p}); }

bool VisibilityIndex::r_visible(Point p, Point q) const {
  if (!contains(p)) throw Error(ErrorCode::PointOutsidePolygon, "first point");
  if (!contains(q)) throw Error(ErrorCode::PointOutsidePolygon, "second point");
  return contains(AxisRect::spanned(p, q));
}

bool r_visible(Point p, Point q, const OrthoPolygon& polygon) {
  return VisibilityIndex(polygon).r_visible(p, q);
}

RectilinearRegion orthogonal_shadow(const HorizontalEdge& e, const OrthoPolygon& polygon) {
  if (!polygon.find_horizontal_edge(e.left, e.right))
    throw Error(ErrorCode::NotAnEdge, "orthogonal shadow");
  const auto d = vertical_decompose(polygon);
  RectilinearRegion region;
  for (const auto& slab : d.slabs) {
    if (slab.x_right <= e.left.x || slab.x_left >= e.right.x) continue;
    AxisRect column{{std::max(slab.x_left, e.left.x), slab.y_low},
                    {std::min(slab.x_right, e.right.x), slab.y_high}};
    if (!region.columns.empty()) {
      auto& last = region.columns.back();
      if (last.lo.y == column.lo.y && last.hi.y == column.hi.y) {
        last.hi.x = column.hi.x;
        continue;
      }
    }
    region.columns.push_back(column);
  }
  return region;
}

Point orthoconvex_kernel_point(const OrthoPolygon& polygon) {
  if (!is_orthoconvex(polygon)) throw Error(ErrorCode::NotOrthoconvex, "kernel point");
  const auto d = vertical_decompose(polygon);

  Coord min_u = d.slabs.front().y_high;
  Coord max_l = d.slabs.front().y_low;
  const Slab* top = &d.slabs.front();
  const Slab* bottom = &d.slabs.front();
  for (const auto& s : d.slabs) {
    min_u = std::min(min_u, s.y_high);
    max_l = std::max(max_l, s.y_low);
    if (s.y_high > top->y_high) top = &s;
    if (s.y_low < bottom->y_low) bottom = &s;
  }
  if (max_l > min_u) throw Error(ErrorCode::NoHorizontalSpanner, "kernel point");

  // Extend the extreme slabs to the full top and bottom edges.
  auto edge_range = [&](std::size_t edge) {
    const Point& a = polygon.vertex(edge);
    const Point& b = polygon.vertex(edge + 1);
    return std::make_pair(std::min(a.x, b.x), std::max(a.x, b.x));
  };
  auto [tx0, tx1] = edge_range(top->owner_upper_edge);
  auto [bx0, bx1] = edge_range(bottom->owner_lower_edge);
  Coord x0 = std::max(tx0, bx0);
  Coord x1 = std::min(tx1, bx1);
  if (x0 > x1) throw Error(ErrorCode::NoVerticalSpanner, "kernel point");
  return {x0 + (x1 - x0) / 2, max_l + (min_u - max_l) / 2};
}

}  // namespace rguard
