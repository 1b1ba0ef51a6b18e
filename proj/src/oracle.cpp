#include "rguard/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "rguard/error.hpp"

namespace rguard::oracle {

namespace {

std::vector<Coord> distinct(std::vector<Coord> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Even-odd test at a point given in doubled half-units; never on the boundary.
bool center_inside(const OrthoPolygon& polygon, Coord qx, Coord qy) {
  bool inside = false;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& a = polygon.vertex(i);
    const Point& b = polygon.vertex(i + 1);
    if (a.x != b.x) continue;
    Coord y0 = 2 * std::min(a.y, b.y);
    Coord y1 = 2 * std::max(a.y, b.y);
    if (2 * a.x > qx && y0 <= qy && qy < y1) inside = !inside;
  }
  return inside;
}

std::optional<std::size_t> fine_index(const std::vector<Coord>& lines, Coord v) {
  if (v < lines.front() || v > lines.back()) return std::nullopt;
  auto it = std::lower_bound(lines.begin(), lines.end(), v);
  auto k = static_cast<std::size_t>(it - lines.begin());
  if (*it == v) return 2 * k;
  return 2 * k - 1;
}

// Cells whose closure holds a fine position along one axis.
std::pair<std::size_t, std::size_t> adjacent_cells(std::size_t g, std::size_t cells,
                                                   bool& complete) {
  if (g % 2 == 1) {
    complete = true;
    return {(g - 1) / 2, (g - 1) / 2};
  }
  std::size_t k = g / 2;
  complete = k > 0 && k < cells;
  std::size_t lo = k > 0 ? k - 1 : 0;
  std::size_t hi = k < cells ? k : cells - 1;
  return {lo, hi};
}

}  // namespace

CellGrid::CellGrid(const OrthoPolygon& polygon) {
  std::vector<Coord> xs;
  std::vector<Coord> ys;
  for (const auto& p : polygon.vertices()) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  xs_ = distinct(std::move(xs));
  ys_ = distinct(std::move(ys));

  const std::size_t nx = columns();
  const std::size_t ny = rows();
  inside_.assign(nx * ny, false);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      bool in = center_inside(polygon, xs_[i] + xs_[i + 1], ys_[j] + ys_[j + 1]);
      inside_[i * ny + j] = in;
      if (in) {
        cells_.push_back({i, j});
        centers_.push_back({xs_[i] + xs_[i + 1], ys_[j] + ys_[j + 1]});
      }
    }
  }

  const std::size_t fx = fine_columns();
  const std::size_t fy = fine_rows();
  in_polygon_.assign(fx * fy, false);
  in_interior_.assign(fx * fy, false);
  outside_prefix_.assign((fx + 1) * (fy + 1), 0);
  for (std::size_t gx = 0; gx < fx; ++gx) {
    bool full_x = false;
    auto [cx0, cx1] = adjacent_cells(gx, nx, full_x);
    for (std::size_t gy = 0; gy < fy; ++gy) {
      bool full_y = false;
      auto [cy0, cy1] = adjacent_cells(gy, ny, full_y);
      bool any = false;
      bool all = full_x && full_y;
      for (std::size_t i = cx0; i <= cx1; ++i) {
        for (std::size_t j = cy0; j <= cy1; ++j) {
          any = any || inside(i, j);
          all = all && inside(i, j);
        }
      }
      in_polygon_[gx * fy + gy] = any;
      in_interior_[gx * fy + gy] = all;
    }
  }
  for (std::size_t gx = 0; gx < fx; ++gx) {
    for (std::size_t gy = 0; gy < fy; ++gy) {
      outside_prefix_[(gx + 1) * (fy + 1) + gy + 1] =
          (in_polygon_[gx * fy + gy] ? 0u : 1u) + outside_prefix_[gx * (fy + 1) + gy + 1] +
          outside_prefix_[(gx + 1) * (fy + 1) + gy] - outside_prefix_[gx * (fy + 1) + gy];
    }
  }
}

std::optional<GridPos> CellGrid::locate(Point p) const {
  auto gx = fine_index(xs_, p.x);
  auto gy = fine_index(ys_, p.y);
  if (!gx || !gy) return std::nullopt;
  return GridPos{*gx, *gy};
}

Point CellGrid::representative(GridPos g) const {
  auto along = [](const std::vector<Coord>& lines, std::size_t f) {
    return f % 2 == 0 ? 2 * lines[f / 2] : lines[(f - 1) / 2] + lines[(f + 1) / 2];
  };
  return {along(xs_, g.x), along(ys_, g.y)};
}

bool CellGrid::box_inside(GridPos a, GridPos b) const {
  const std::size_t fy = fine_rows() + 1;
  std::size_t x0 = std::min(a.x, b.x);
  std::size_t x1 = std::max(a.x, b.x) + 1;
  std::size_t y0 = std::min(a.y, b.y);
  std::size_t y1 = std::max(a.y, b.y) + 1;
  std::uint32_t outside = outside_prefix_[x1 * fy + y1] - outside_prefix_[x0 * fy + y1] -
                          outside_prefix_[x1 * fy + y0] + outside_prefix_[x0 * fy + y0];
  return outside == 0;
}

bool CellGrid::contains(Point p) const {
  auto g = locate(p);
  return g && in_polygon(*g);
}

bool CellGrid::r_visible(Point p, Point q) const {
  auto a = locate(p);
  auto b = locate(q);
  if (!a || !in_polygon(*a)) throw Error(ErrorCode::PointOutsidePolygon, "first point");
  if (!b || !in_polygon(*b)) throw Error(ErrorCode::PointOutsidePolygon, "second point");
  return box_inside(*a, *b);
}

CellGrid build_cells(const OrthoPolygon& polygon) { return CellGrid(polygon); }

VisibilityMatrix visibility_matrix(const CellGrid& grid) {
  VisibilityMatrix m;
  m.size = grid.cells().size();
  m.entries.assign(m.size * m.size, false);
  for (std::size_t a = 0; a < m.size; ++a)
    for (std::size_t b = 0; b < m.size; ++b)
      m.entries[a * m.size + b] = grid.box_inside(grid.cell_pos(a), grid.cell_pos(b));
  return m;
}

namespace {

std::vector<GridPos> locate_all(std::span<const Point> points, const CellGrid& grid) {
  std::vector<GridPos> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto g = grid.locate(points[i]);
    if (!g || !grid.in_polygon(*g))
      throw Error(ErrorCode::PointOutsidePolygon, "guard point", i);
    out.push_back(*g);
  }
  return out;
}

}  // namespace

CoverResult verify_cover(std::span<const Point> points, const CellGrid& grid) {
  const auto guards = locate_all(points, grid);
  CoverResult result;
  for (std::size_t c = 0; c < grid.cells().size(); ++c) {
    const GridPos target = grid.cell_pos(c);
    bool seen = std::any_of(guards.begin(), guards.end(),
                            [&](const GridPos& g) { return grid.box_inside(g, target); });
    if (!seen) result.uncovered.push_back(c);
  }
  result.covered = result.uncovered.empty();
  return result;
}

CoverResult verify_cover(std::span<const Point> points, const OrthoPolygon& polygon) {
  return verify_cover(points, CellGrid(polygon));
}

HiddenResult verify_hidden(std::span<const Point> points, const CellGrid& grid) {
  const auto guards = locate_all(points, grid);
  HiddenResult result;
  for (std::size_t a = 0; a < guards.size(); ++a) {
    for (std::size_t b = a + 1; b < guards.size(); ++b) {
      if (grid.box_inside(guards[a], guards[b])) {
        result.offending = std::make_pair(a, b);
        return result;
      }
    }
  }
  result.hidden = true;
  return result;
}

HiddenResult verify_hidden(std::span<const Point> points, const OrthoPolygon& polygon) {
  return verify_hidden(points, CellGrid(polygon));
}

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Iterative deepening over guard count. Branches on the uncovered cell with
// the fewest remaining options, trying its candidates in index order.
class Search {
 public:
  Search(const CellGrid& grid, bool hidden) : grid_(grid), hidden_(hidden) {
    const std::size_t targets = grid.cells().size();
    all_ = targets == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << targets) - 1;

    for (std::size_t gx = 0; gx < grid.fine_columns(); ++gx) {
      for (std::size_t gy = 0; gy < grid.fine_rows(); ++gy) {
        GridPos g{gx, gy};
        if (hidden ? !grid.in_interior(g) : !grid.in_polygon(g)) continue;
        std::uint64_t mask = 0;
        for (std::size_t c = 0; c < targets; ++c)
          if (grid.box_inside(g, grid.cell_pos(c))) mask |= std::uint64_t{1} << c;
        candidates_.push_back(g);
        cover_.push_back(mask);
      }
    }
    if (!hidden) drop_dominated();

    const std::size_t n = candidates_.size();
    if (hidden) {
      conflicts_.assign(n, Bitset(n));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (grid.box_inside(candidates_[a], candidates_[b])) conflicts_[a].set(b);
    }
    by_target_.resize(targets);
    for (std::size_t c = 0; c < n; ++c) {
      max_cover_ = std::max(max_cover_, static_cast<std::size_t>(std::popcount(cover_[c])));
      for (std::size_t t = 0; t < targets; ++t)
        if ((cover_[c] >> t) & 1u) by_target_[t].push_back(c);
    }
  }

  std::optional<SearchResult> run(std::size_t limit) {
    if (all_ == 0) return SearchResult{};
    for (std::size_t k = 1; k <= limit; ++k) {
      chosen_.clear();
      failed_.assign(k + 1, {});
      if (dfs(all_, k, Bitset(candidates_.size()))) {
        SearchResult r;
        r.count = k;
        for (auto c : chosen_) r.guards.push_back(grid_.representative(candidates_[c]));
        return r;
      }
    }
    return std::nullopt;
  }

 private:
  void drop_dominated() {
    std::vector<bool> drop(candidates_.size(), false);
    for (std::size_t a = 0; a < candidates_.size(); ++a) {
      for (std::size_t b = 0; b < candidates_.size() && !drop[a]; ++b) {
        if (a == b || drop[b]) continue;
        bool subset = (cover_[a] & ~cover_[b]) == 0;
        if (subset && (cover_[a] != cover_[b] || b < a)) drop[a] = true;
      }
    }
    std::vector<GridPos> kept;
    std::vector<std::uint64_t> kept_cover;
    for (std::size_t a = 0; a < candidates_.size(); ++a) {
      if (drop[a]) continue;
      kept.push_back(candidates_[a]);
      kept_cover.push_back(cover_[a]);
    }
    candidates_ = std::move(kept);
    cover_ = std::move(kept_cover);
  }

  bool dfs(std::uint64_t uncovered, std::size_t budget, const Bitset& blocked) {
    if (uncovered == 0) return true;
    if (budget == 0) return false;
    if (static_cast<std::size_t>(std::popcount(uncovered)) > budget * max_cover_) return false;
    if (!hidden_ && failed_[budget].count(uncovered)) return false;

    std::size_t best_target = 0;
    std::size_t best_options = SIZE_MAX;
    for (std::uint64_t rest = uncovered; rest != 0; rest &= rest - 1) {
      std::size_t t = static_cast<std::size_t>(std::countr_zero(rest));
      std::size_t options = 0;
      for (auto c : by_target_[t])
        if (!hidden_ || !blocked.test(c)) ++options;
      if (options < best_options) {
        best_options = options;
        best_target = t;
      }
    }
    if (best_options == 0) return false;

    for (auto c : by_target_[best_target]) {
      if (hidden_ && blocked.test(c)) continue;
      chosen_.push_back(c);
      bool ok;
      if (hidden_) {
        Bitset next = blocked;
        next |= conflicts_[c];
        ok = dfs(uncovered & ~cover_[c], budget - 1, next);
      } else {
        ok = dfs(uncovered & ~cover_[c], budget - 1, blocked);
      }
      if (ok) return true;
      chosen_.pop_back();
    }
    if (!hidden_) failed_[budget].insert(uncovered);
    return false;
  }

  const CellGrid& grid_;
  bool hidden_;
  std::uint64_t all_ = 0;
  std::vector<GridPos> candidates_;
  std::vector<std::uint64_t> cover_;
  std::vector<Bitset> conflicts_;
  std::vector<std::vector<std::size_t>> by_target_;
  std::size_t max_cover_ = 0;
  std::vector<std::size_t> chosen_;
  // Uncovered sets already shown unsolvable, per remaining budget.
  std::vector<std::unordered_set<std::uint64_t>> failed_;
};

SearchResult solve(const OrthoPolygon& polygon, SearchOptions options, bool hidden) {
  CellGrid grid(polygon);
  if (grid.cells().size() > options.cap || grid.cells().size() > 64)
    throw Error(ErrorCode::CapExceeded,
                std::to_string(grid.cells().size()) + " inside cells exceed the cap of " +
                    std::to_string(options.cap));
  auto result = Search(grid, hidden).run(options.limit);
  if (!result)
    throw Error(ErrorCode::NoSolutionWithinLimit,
                "no guard set of size <= " + std::to_string(options.limit));
  return *result;
}

}  // namespace

SearchResult solve_min_guards(const OrthoPolygon& polygon, SearchOptions options) {
  return solve(polygon, options, false);
}

SearchResult solve_min_hidden_guards(const OrthoPolygon& polygon, SearchOptions options) {
  return solve(polygon, options, true);
}

std::size_t min_guards_bruteforce(const OrthoPolygon& polygon, std::size_t limit) {
  return solve_min_guards(polygon, {.limit = limit}).count;
}

std::size_t min_hidden_guards_bruteforce(const OrthoPolygon& polygon, std::size_t limit) {
  return solve_min_hidden_guards(polygon, {.limit = limit}).count;
}

}  // namespace rguard::oracle
