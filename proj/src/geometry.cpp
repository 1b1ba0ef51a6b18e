#include "rguard/geometry.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

#include "rguard/error.hpp"

namespace rguard {

AxisRect AxisRect::spanned(Point a, Point b) {
  return {{std::min(a.x, b.x), std::min(a.y, b.y)},
          {std::max(a.x, b.x), std::max(a.y, b.y)}};
}

std::optional<AxisRect> intersect(const AxisRect& a, const AxisRect& b) {
  AxisRect r{{std::max(a.lo.x, b.lo.x), std::max(a.lo.y, b.lo.y)},
             {std::min(a.hi.x, b.hi.x), std::min(a.hi.y, b.hi.y)}};
  if (!r.valid()) return std::nullopt;
  return r;
}

bool RectilinearRegion::contains(Point p) const {
  return std::any_of(columns.begin(), columns.end(),
                     [&](const AxisRect& c) { return c.contains(p); });
}

RectilinearRegion intersect(const RectilinearRegion& region, const AxisRect& rect) {
  RectilinearRegion out;
  for (const auto& column : region.columns) {
    auto r = intersect(column, rect);
    if (!r) continue;
    if (!out.columns.empty()) {
      auto& last = out.columns.back();
      // Collapse degenerate slivers and merge equal-height neighbours.
      if (last.hi.x == r->lo.x && last.lo.y == r->lo.y && last.hi.y == r->hi.y) {
        last.hi.x = r->hi.x;
        continue;
      }
      if (r->width() == 0 && last.hi.x == r->lo.x) continue;
      if (last.width() == 0 && last.lo.x == r->lo.x) {
        last = *r;
        continue;
      }
    }
    out.columns.push_back(*r);
  }
  return out;
}

namespace {

__int128 cross(Point o, Point a, Point b) {
  return static_cast<__int128>(a.x - o.x) * (b.y - a.y) -
         static_cast<__int128>(a.y - o.y) * (b.x - a.x);
}

__int128 shoelace(const std::vector<Point>& v) {
  __int128 sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    sum += static_cast<__int128>(a.x) * b.y - static_cast<__int128>(b.x) * a.y;
  }
  return sum;
}

void check_edges(const std::vector<Point>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    if (a == b) throw Error(ErrorCode::ZeroLengthEdge, "repeated vertex", i);
    if (a.x != b.x && a.y != b.y)
      throw Error(ErrorCode::NonAlternatingEdges, "edge is not axis-parallel", i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool h0 = v[i].y == v[(i + 1) % n].y;
    bool h1 = v[(i + 1) % n].y == v[(i + 2) % n].y;
    if (h0 == h1)
      throw Error(ErrorCode::NonAlternatingEdges,
                  "consecutive edges share an orientation", (i + 1) % n);
  }
}

struct Segment {
  Coord fixed;  // y for horizontal, x for vertical
  Coord lo;
  Coord hi;
  std::size_t index;
};

void check_collinear_overlaps(std::vector<Segment> segs) {
  std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
    return std::tie(a.fixed, a.lo) < std::tie(b.fixed, b.lo);
  });
  for (std::size_t i = 1; i < segs.size(); ++i) {
    // Running max within the same line; sorted by lo so one pass suffices.
    if (segs[i].fixed == segs[i - 1].fixed && segs[i].lo <= segs[i - 1].hi)
      throw Error(ErrorCode::SelfIntersection, "collinear edges overlap",
                  segs[i].index);
    if (segs[i].fixed == segs[i - 1].fixed)
      segs[i].hi = std::max(segs[i].hi, segs[i - 1].hi);
  }
}

// Sweep in x: horizontal edges are active over their closed x-range and each
// vertical edge may only meet its two neighbouring horizontals.
void check_crossings(const std::vector<Segment>& horizontal,
                     const std::vector<Segment>& vertical, std::size_t n) {
  enum Kind { Insert = 0, Query = 1, Remove = 2 };
  struct Event {
    Coord x;
    int kind;
    std::size_t seg;
  };
  std::vector<Event> events;
  events.reserve(2 * horizontal.size() + vertical.size());
  for (std::size_t i = 0; i < horizontal.size(); ++i) {
    events.push_back({horizontal[i].lo, Insert, i});
    events.push_back({horizontal[i].hi, Remove, i});
  }
  for (std::size_t i = 0; i < vertical.size(); ++i)
    events.push_back({vertical[i].fixed, Query, i});
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return std::tie(a.x, a.kind) < std::tie(b.x, b.kind);
  });

  std::set<std::pair<Coord, std::size_t>> active;  // (y, edge index)
  for (const auto& ev : events) {
    if (ev.kind == Insert) {
      active.emplace(horizontal[ev.seg].fixed, horizontal[ev.seg].index);
    } else if (ev.kind == Remove) {
      active.erase({horizontal[ev.seg].fixed, horizontal[ev.seg].index});
    } else {
      const Segment& s = vertical[ev.seg];
      std::size_t prev = (s.index + n - 1) % n;
      std::size_t next = (s.index + 1) % n;
      for (auto it = active.lower_bound({s.lo, 0});
           it != active.end() && it->first <= s.hi; ++it) {
        if (it->second != prev && it->second != next)
          throw Error(ErrorCode::SelfIntersection, "edges cross or touch",
                      s.index);
      }
    }
  }
}

void check_simple(const std::vector<Point>& v) {
  const std::size_t n = v.size();
  std::vector<Segment> horizontal;
  std::vector<Segment> vertical;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    if (a.y == b.y)
      horizontal.push_back({a.y, std::min(a.x, b.x), std::max(a.x, b.x), i});
    else
      vertical.push_back({a.x, std::min(a.y, b.y), std::max(a.y, b.y), i});
  }
  check_collinear_overlaps(horizontal);
  check_collinear_overlaps(vertical);
  check_crossings(horizontal, vertical, n);
}

}  // namespace

bool OrthoPolygon::is_convex(std::size_t i) const {
  const std::size_t n = vertices_.size();
  return cross(vertex(i + n - 1), vertex(i), vertex(i + 1)) > 0;
}

std::optional<std::size_t> OrthoPolygon::find_horizontal_edge(Point a, Point b) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Point& p = vertex(i);
    const Point& q = vertex(i + 1);
    if (p.y != q.y) continue;
    if ((p == a && q == b) || (p == b && q == a)) return i;
  }
  return std::nullopt;
}

OrthoPolygon OrthoPolygon::from_scaled(std::vector<Point> v) {
  if (v.empty()) throw Error(ErrorCode::EmptyInput, "no vertices");
  if (v.size() > 1 && v.front() == v.back()) v.pop_back();
  if (v.size() % 2 != 0)
    throw Error(ErrorCode::OddVertexCount,
                "orthogonal polygons have an even vertex count", v.size());
  if (v.size() < 4)
    throw Error(ErrorCode::NonAlternatingEdges, "fewer than four vertices", 0);
  check_edges(v);
  check_simple(v);

  __int128 area = shoelace(v);
  if (area < 0) {
    std::reverse(v.begin(), v.end());
    area = -area;
  }

  OrthoPolygon poly;
  poly.doubled_area_ = area;
  Point lo = v.front();
  Point hi = v.front();
  for (const auto& p : v) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  poly.bbox_ = {lo, hi};
  poly.vertices_ = std::move(v);
  return poly;
}

OrthoPolygon validate(std::span<const Point> user_vertices) {
  std::vector<Point> scaled;
  scaled.reserve(user_vertices.size());
  for (const auto& p : user_vertices) scaled.push_back(from_user(p.x, p.y));
  return OrthoPolygon::from_scaled(std::move(scaled));
}

namespace {

// Splits cyclic edge indices whose sign is +1/-1 into exactly two runs.
// Returns nullopt when there are more than two sign changes.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
two_runs(const OrthoPolygon& poly, bool horizontal) {
  const std::size_t n = poly.size();
  std::vector<std::size_t> edges;
  std::vector<int> sign;
  for (std::size_t i = 0; i < n; ++i) {
    if (poly.is_horizontal_edge(i) != horizontal) continue;
    const Point& a = poly.vertex(i);
    const Point& b = poly.vertex(i + 1);
    Coord d = horizontal ? b.x - a.x : b.y - a.y;
    edges.push_back(i);
    sign.push_back(d > 0 ? 1 : -1);
  }
  const std::size_t m = edges.size();
  std::size_t changes = 0;
  std::size_t start = 0;  // first edge of the positive run
  for (std::size_t k = 0; k < m; ++k) {
    if (sign[k] != sign[(k + m - 1) % m]) {
      ++changes;
      if (sign[k] > 0) start = k;
    }
  }
  if (changes != 2) return std::nullopt;
  std::vector<std::size_t> positive;
  std::vector<std::size_t> negative;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t idx = (start + k) % m;
    (sign[idx] > 0 ? positive : negative).push_back(edges[idx]);
  }
  return std::make_pair(std::move(positive), std::move(negative));
}

}  // namespace

std::optional<MonotoneChains> monotone_chains(const OrthoPolygon& polygon) {
  auto runs = two_runs(polygon, true);
  if (!runs) return std::nullopt;
  MonotoneChains chains;
  // Counterclockwise: the lower chain walks +x, the upper chain walks -x.
  chains.lower = std::move(runs->first);
  chains.upper.assign(runs->second.rbegin(), runs->second.rend());
  return chains;
}

HorizontalEdge horizontal_edge(const OrthoPolygon& polygon, std::size_t edge,
                               Chain chain) {
  Point a = polygon.vertex(edge);
  Point b = polygon.vertex(edge + 1);
  if (a.x > b.x) std::swap(a, b);
  return {a, b, chain};
}

EdgeClass classify_edge(const OrthoPolygon& polygon, std::size_t edge) {
  bool a = polygon.is_convex(edge);
  bool b = polygon.is_convex(edge + 1);
  if (a && b) return EdgeClass::Tooth;
  if (!a && !b) return EdgeClass::Dent;
  return EdgeClass::Step;
}

EdgeClass classify_edge(const HorizontalEdge& e, const OrthoPolygon& polygon) {
  auto idx = polygon.find_horizontal_edge(e.left, e.right);
  if (!idx) throw Error(ErrorCode::NotAnEdge, "no such horizontal edge");
  return classify_edge(polygon, *idx);
}

EdgeCounts count_edge_classes(const OrthoPolygon& polygon) {
  EdgeCounts counts;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    if (!polygon.is_horizontal_edge(i)) continue;
    switch (classify_edge(polygon, i)) {
      case EdgeClass::Tooth: ++counts.teeth; break;
      case EdgeClass::Dent: ++counts.dents; break;
      case EdgeClass::Step: ++counts.steps; break;
    }
  }
  return counts;
}

bool is_x_monotone(const OrthoPolygon& polygon) {
  return two_runs(polygon, true).has_value();
}

bool is_y_monotone(const OrthoPolygon& polygon) {
  return two_runs(polygon, false).has_value();
}

bool is_orthoconvex(const OrthoPolygon& polygon) {
  return is_x_monotone(polygon) && is_y_monotone(polygon);
}

bool is_histogram(const OrthoPolygon& polygon) {
  auto chains = monotone_chains(polygon);
  return chains && chains->lower.size() == 1;
}

bool is_pyramid(const OrthoPolygon& polygon) {
  auto chains = monotone_chains(polygon);
  if (!chains || chains->lower.size() != 1) return false;
  return std::none_of(chains->upper.begin(), chains->upper.end(), [&](std::size_t e) {
    return classify_edge(polygon, e) == EdgeClass::Dent;
  });
}

bool is_balanced(const OrthoPolygon& polygon) {
  auto chains = monotone_chains(polygon);
  if (!chains) return false;
  Coord max_l = polygon.vertex(chains->lower.front()).y;
  Coord min_u = polygon.vertex(chains->upper.front()).y;
  for (auto e : chains->lower) max_l = std::max(max_l, polygon.vertex(e).y);
  for (auto e : chains->upper) min_u = std::min(min_u, polygon.vertex(e).y);
  return max_l <= min_u;
}

bool contains_point(const OrthoPolygon& polygon, Point p) {
  const std::size_t n = polygon.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon.vertex(i);
    const Point& b = polygon.vertex(i + 1);
    if (AxisRect::spanned(a, b).contains(p)) return true;
    if (a.x != b.x) continue;
    Coord y0 = std::min(a.y, b.y);
    Coord y1 = std::max(a.y, b.y);
    if (a.x > p.x && y0 <= p.y && p.y < y1) inside = !inside;
  }
  return inside;
}

}  // namespace rguard
