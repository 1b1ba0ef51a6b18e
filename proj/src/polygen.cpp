#include "rguard/polygen.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "rguard/error.hpp"

namespace rguard {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Coord SplitMix64::uniform(Coord lo, Coord hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<Coord>(next() % span);
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "monotone") return Family::Monotone;
  if (name == "balanced") return Family::Balanced;
  if (name == "histogram") return Family::Histogram;
  if (name == "pyramid") return Family::Pyramid;
  return std::nullopt;
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Monotone: return "monotone";
    case Family::Balanced: return "balanced";
    case Family::Histogram: return "histogram";
    case Family::Pyramid: return "pyramid";
  }
  return "unknown";
}

std::vector<Point> profile_vertices(const std::vector<Coord>& lows,
                                    const std::vector<Coord>& highs) {
  const auto k = static_cast<Coord>(lows.size());
  std::vector<Point> v;
  v.push_back({0, lows.front()});
  for (Coord i = 0; i + 1 < k; ++i) {
    if (lows[i] != lows[i + 1]) {
      v.push_back({i + 1, lows[i]});
      v.push_back({i + 1, lows[i + 1]});
    }
  }
  v.push_back({k, lows.back()});
  v.push_back({k, highs.back()});
  for (Coord i = k - 1; i > 0; --i) {
    if (highs[i] != highs[i - 1]) {
      v.push_back({i, highs[i]});
      v.push_back({i, highs[i - 1]});
    }
  }
  v.push_back({0, highs.front()});
  return v;
}

namespace {

// Uniform over [lo, hi] without `skip`; nullopt when nothing is left.
std::optional<Coord> pick_except(SplitMix64& rng, Coord lo, Coord hi, Coord skip) {
  if (lo > hi) return std::nullopt;
  bool skip_in = lo <= skip && skip <= hi;
  Coord count = hi - lo + 1 - (skip_in ? 1 : 0);
  if (count <= 0) return std::nullopt;
  Coord v = lo + rng.uniform(0, count - 1);
  if (skip_in && v >= skip) ++v;
  return v;
}

void chained(const GenSpec& spec, SplitMix64& rng, bool balanced, std::vector<Coord>& lows,
             std::vector<Coord>& highs) {
  lows.push_back(0);
  highs.push_back(rng.uniform(spec.min_height, spec.max_height));
  Coord min_u = highs.back();
  Coord max_l = lows.back();
  for (std::size_t i = 1; i < spec.slab_count; ++i) {
    const Coord l = lows.back();
    const Coord u = highs.back();
    const Coord floor_u = balanced ? max_l : std::numeric_limits<Coord>::min();
    const Coord ceil_l = balanced ? min_u : std::numeric_limits<Coord>::max();
    auto move_upper = [&] {
      return pick_except(rng, std::max(l + spec.min_height, floor_u), l + spec.max_height, u);
    };
    auto move_lower = [&] {
      return pick_except(rng, u - spec.max_height, std::min(u - spec.min_height, ceil_l), l);
    };
    bool upper_first = rng.next() & 1u;
    std::optional<Coord> nu;
    std::optional<Coord> nl;
    if (upper_first) {
      nu = move_upper();
      if (!nu) nl = move_lower();
    } else {
      nl = move_lower();
      if (!nl) nu = move_upper();
    }
    if (!nu && !nl) throw Error(ErrorCode::InvalidSpec, "height range admits no next slab");
    lows.push_back(nl.value_or(l));
    highs.push_back(nu.value_or(u));
    min_u = std::min(min_u, highs.back());
    max_l = std::max(max_l, lows.back());
  }
}

// r distinct values from [lo, hi], ascending.
std::vector<Coord> sample_distinct(SplitMix64& rng, Coord lo, Coord hi, std::size_t r) {
  std::vector<Coord> pool;
  for (Coord v = lo; v <= hi; ++v) pool.push_back(v);
  for (std::size_t i = 0; i < r; ++i) {
    auto j = static_cast<std::size_t>(rng.uniform(static_cast<Coord>(i),
                                                  static_cast<Coord>(pool.size() - 1)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(r);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

std::vector<Point> generate_vertices(const GenSpec& spec) {
  if (spec.slab_count < 1) throw Error(ErrorCode::InvalidSpec, "slab_count must be >= 1");
  if (spec.min_height < 1 || spec.min_height > spec.max_height)
    throw Error(ErrorCode::InvalidSpec, "height range must be nonempty and positive");
  if (spec.slab_count > 1 && spec.min_height == spec.max_height)
    throw Error(ErrorCode::InvalidSpec, "neighbouring slabs need two distinct heights");

  SplitMix64 rng(spec.seed);
  const std::size_t k = spec.slab_count;
  std::vector<Coord> lows;
  std::vector<Coord> highs;
  switch (spec.family) {
    case Family::Monotone:
      chained(spec, rng, false, lows, highs);
      break;
    case Family::Balanced:
      chained(spec, rng, true, lows, highs);
      break;
    case Family::Histogram: {
      lows.assign(k, 0);
      highs.push_back(rng.uniform(spec.min_height, spec.max_height));
      for (std::size_t i = 1; i < k; ++i)
        highs.push_back(*pick_except(rng, spec.min_height, spec.max_height, highs.back()));
      break;
    }
    case Family::Pyramid: {
      // Strictly rising to a peak at max_height, then strictly falling.
      const auto room = static_cast<std::size_t>(spec.max_height - spec.min_height);
      if (k - 1 > 2 * room)
        throw Error(ErrorCode::InvalidSpec, "height range too narrow for a pyramid this wide");
      const std::size_t lo_peak = k - 1 > room ? k - 1 - room : 0;
      const std::size_t hi_peak = std::min(room, k - 1);
      const auto peak = static_cast<std::size_t>(
          rng.uniform(static_cast<Coord>(lo_peak), static_cast<Coord>(hi_peak)));
      auto left = sample_distinct(rng, spec.min_height, spec.max_height - 1, peak);
      auto right = sample_distinct(rng, spec.min_height, spec.max_height - 1, k - 1 - peak);
      lows.assign(k, 0);
      highs = left;
      highs.push_back(spec.max_height);
      highs.insert(highs.end(), right.rbegin(), right.rend());
      break;
    }
  }
  return profile_vertices(lows, highs);
}

OrthoPolygon generate(const GenSpec& spec) {
  const auto v = generate_vertices(spec);
  return validate(v);
}

}  // namespace rguard
