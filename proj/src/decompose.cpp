#include "rguard/decompose.hpp"

#include <algorithm>
#include <utility>

#include "rguard/error.hpp"

namespace rguard {

namespace {

struct ChainEdge {
  Coord x_left;
  Coord x_right;
  Coord y;
  std::size_t edge;
};

std::vector<ChainEdge> chain_edges(const OrthoPolygon& polygon,
                                   const std::vector<std::size_t>& chain) {
  std::vector<ChainEdge> out;
  out.reserve(chain.size());
  for (auto e : chain) {
    const Point& a = polygon.vertex(e);
    const Point& b = polygon.vertex(e + 1);
    out.push_back({std::min(a.x, b.x), std::max(a.x, b.x), a.y, e});
  }
  return out;
}

}  // namespace

VerticalDecomposition vertical_decompose(const OrthoPolygon& polygon) {
  auto chains = monotone_chains(polygon);
  if (!chains) throw Error(ErrorCode::NotXMonotone, "vertical decomposition");

  const auto lower = chain_edges(polygon, chains->lower);
  const auto upper = chain_edges(polygon, chains->upper);

  VerticalDecomposition out;
  out.slabs.reserve(lower.size() + upper.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Coord x = lower.front().x_left;
  while (i < lower.size() && j < upper.size()) {
    Coord next = std::min(lower[i].x_right, upper[j].x_right);
    Slab s;
    s.index = out.slabs.size() + 1;
    s.x_left = x;
    s.x_right = next;
    s.y_low = lower[i].y;
    s.y_high = upper[j].y;
    s.owner_lower_edge = lower[i].edge;
    s.owner_upper_edge = upper[j].edge;
    out.slabs.push_back(s);
    if (lower[i].x_right == next) ++i;
    if (upper[j].x_right == next) ++j;
    x = next;
  }
  out.chains = std::move(*chains);
  return out;
}

std::vector<BalancedPiece> balanced_decompose(const VerticalDecomposition& d,
                                              Variant variant) {
  const auto& s = d.slabs;
  const std::size_t k = s.size();
  std::vector<BalancedPiece> pieces;

  auto make_piece = [&](std::size_t first, std::size_t last, bool is_last_piece) {
    BalancedPiece p;
    p.first = first + 1;
    p.last = last + 1;
    p.min_u = s[first].y_high;
    p.max_l = s[first].y_low;
    for (std::size_t t = first; t <= last; ++t) {
      p.min_u = std::min(p.min_u, s[t].y_high);
      p.max_l = std::max(p.max_l, s[t].y_low);
    }
    if (!is_last_piece) p.cut_slab = p.last;
    p.align_y = p.max_l + (p.min_u - p.max_l) / 2;
    return p;
  };

  std::size_t start = 0;
  while (start < k) {
    Coord min_u = s[start].y_high;
    Coord max_l = s[start].y_low;
    std::size_t cut = k;
    for (std::size_t i = start + 1; i < k; ++i) {
      if (s[i].y_high < max_l || s[i].y_low > min_u) {
        cut = i;
        break;
      }
      min_u = std::min(min_u, s[i].y_high);
      max_l = std::max(max_l, s[i].y_low);
    }
    if (cut == k) {
      pieces.push_back(make_piece(start, k - 1, true));
      break;
    }
    std::size_t end = cut - 1;
    if (variant == Variant::Modified && end > start) {
      // The pre-cut slab stays only if it is a local height maximum.
      bool keep = s[end].height() > s[cut].height() &&
                  s[end].height() > s[end - 1].height();
      if (!keep) end -= 1;
    }
    pieces.push_back(make_piece(start, end, false));
    start = end + 1;
  }
  return pieces;
}

std::vector<BalancedPiece> balanced_decompose(const OrthoPolygon& polygon,
                                              Variant variant) {
  return balanced_decompose(vertical_decompose(polygon), variant);
}

HorizontalEdge align_segment(const VerticalDecomposition& d, const BalancedPiece& piece) {
  const Coord x0 = d.slab(piece.first).x_left;
  const Coord x1 = d.slab(piece.last).x_right;
  return {{x0, piece.align_y}, {x1, piece.align_y}, Chain::Lower};
}

OrthoPolygon piece_polygon(const VerticalDecomposition& d, const BalancedPiece& piece) {
  std::vector<Point> v;
  const std::size_t a = piece.first - 1;
  const std::size_t b = piece.last - 1;
  const auto& s = d.slabs;
  v.push_back({s[a].x_left, s[a].y_low});
  for (std::size_t j = a; j < b; ++j) {
    if (s[j].y_low != s[j + 1].y_low) {
      v.push_back({s[j].x_right, s[j].y_low});
      v.push_back({s[j].x_right, s[j + 1].y_low});
    }
  }
  v.push_back({s[b].x_right, s[b].y_low});
  v.push_back({s[b].x_right, s[b].y_high});
  for (std::size_t j = b; j > a; --j) {
    if (s[j].y_high != s[j - 1].y_high) {
      v.push_back({s[j].x_left, s[j].y_high});
      v.push_back({s[j].x_left, s[j - 1].y_high});
    }
  }
  v.push_back({s[a].x_left, s[a].y_high});
  return OrthoPolygon::from_scaled(std::move(v));
}

namespace {

void append_run(std::vector<ProfileRun>& runs, ProfileRun run) {
  if (!runs.empty() && runs.back().y == run.y && runs.back().x_right == run.x_left) {
    runs.back().x_right = run.x_right;
    return;
  }
  runs.push_back(run);
}

struct PyramidBuilder {
  Coord y_base;
  Coord x_start;
  std::vector<ProfileRun> runs;
  std::size_t order;
};

Pyramid finish(PyramidBuilder&& b, Coord x_end) {
  const auto apex = std::max_element(
      b.runs.begin(), b.runs.end(),
      [](const ProfileRun& l, const ProfileRun& r) { return l.y < r.y; });

  std::vector<Point> v;
  v.reserve(2 * b.runs.size() + 2);
  v.push_back({b.x_start, b.y_base});
  v.push_back({x_end, b.y_base});
  for (auto it = b.runs.rbegin(); it != b.runs.rend(); ++it) {
    v.push_back({it->x_right, it->y});
    v.push_back({it->x_left, it->y});
  }

  Pyramid p{
      .base = {{b.x_start, b.y_base}, {x_end, b.y_base}, Chain::Lower},
      .apex_tooth = {{apex->x_left, apex->y}, {apex->x_right, apex->y}, Chain::Upper},
      .basis_rect = {},
      .profile = std::move(b.runs),
      .boundary = OrthoPolygon::from_scaled(std::move(v)),
  };
  p.basis_rect = basis_rectangle(p);
  return p;
}

}  // namespace

std::vector<Pyramid> pyramid_decompose(const OrthoPolygon& histogram) {
  if (!is_histogram(histogram)) throw Error(ErrorCode::NotHistogram, "pyramid decomposition");
  const auto d = vertical_decompose(histogram);
  const auto& s = d.slabs;

  std::vector<PyramidBuilder> open;
  std::vector<std::pair<std::size_t, Pyramid>> done;
  std::size_t next_order = 0;
  open.push_back({s.front().y_low, s.front().x_left, {}, next_order++});

  auto close_top = [&](Coord x) {
    PyramidBuilder b = std::move(open.back());
    open.pop_back();
    append_run(open.back().runs, {b.x_start, x, b.y_base});
    std::size_t order = b.order;
    done.emplace_back(order, finish(std::move(b), x));
  };

  bool dropped = false;  // the previous slab was entered by a step down
  for (std::size_t j = 0; j < s.size(); ++j) {
    const Coord h = s[j].y_high;
    const Coord x = s[j].x_left;
    if (j > 0) {
      const Coord prev = s[j - 1].y_high;
      if (h < prev) {
        while (open.size() > 1 && open.back().y_base >= h) close_top(x);
        dropped = true;
      } else {
        // The previous slab was a dent: its extension starts here.
        if (dropped) open.push_back({prev, x, {}, next_order++});
        dropped = false;
      }
    }
    append_run(open.back().runs, {x, s[j].x_right, h});
  }
  const Coord x_end = s.back().x_right;
  while (open.size() > 1) close_top(x_end);
  done.emplace_back(open.back().order, finish(std::move(open.back()), x_end));

  std::sort(done.begin(), done.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<Pyramid> out;
  out.reserve(done.size());
  for (auto& [order, p] : done) out.push_back(std::move(p));
  return out;
}

AxisRect basis_rectangle(const Pyramid& pyramid) {
  const auto& runs = pyramid.profile;
  const Coord y_base = pyramid.base.y();
  std::size_t apex = 0;
  for (std::size_t i = 1; i < runs.size(); ++i)
    if (runs[i].y > runs[apex].y) apex = i;

  std::size_t l = apex;
  std::size_t r = apex;
  Coord t = runs[apex].y;
  AxisRect best{};
  __int128 best_area = -1;
  for (;;) {
    while (l > 0 && runs[l - 1].y >= t) --l;
    while (r + 1 < runs.size() && runs[r + 1].y >= t) ++r;
    AxisRect cand{{runs[l].x_left, y_base}, {runs[r].x_right, t}};
    __int128 area = static_cast<__int128>(cand.width()) * cand.height();
    bool better = area > best_area ||
                  (area == best_area &&
                   (cand.lo.x < best.lo.x || (cand.lo.x == best.lo.x && t < best.hi.y)));
    if (better) {
      best = cand;
      best_area = area;
    }
    if (l == 0 && r + 1 == runs.size()) break;
    Coord left = l > 0 ? runs[l - 1].y : y_base;
    Coord right = r + 1 < runs.size() ? runs[r + 1].y : y_base;
    t = std::max(left, right);
  }
  return best;
}

}  // namespace rguard
