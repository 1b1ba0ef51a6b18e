#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rguard/geometry.hpp"

namespace rguard {

/// SplitMix64. Each call advances the state by 0x9E3779B97F4A7C15 and mixes:
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
/// uniform(lo, hi) is lo + next() % (hi - lo + 1).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  Coord uniform(Coord lo, Coord hi);

 private:
  std::uint64_t state_;
};

enum class Family { Monotone, Balanced, Histogram, Pyramid };

std::optional<Family> parse_family(std::string_view name);
std::string_view to_string(Family family);

struct GenSpec {
  Family family = Family::Monotone;
  std::size_t slab_count = 1;
  /// Bounds on each slab's height (y_high - y_low), user units.
  Coord min_height = 1;
  Coord max_height = 8;
  std::uint64_t seed = 0;
};

/// User-coordinate vertices; slab i spans x in [i, i+1]. Throws InvalidSpec.
std::vector<Point> generate_vertices(const GenSpec& spec);

/// generate_vertices passed through validate().
OrthoPolygon generate(const GenSpec& spec);

/// Vertices of the x-monotone polygon with unit-width slabs [lows[i], highs[i]].
std::vector<Point> profile_vertices(const std::vector<Coord>& lows,
                                    const std::vector<Coord>& highs);

}  // namespace rguard
