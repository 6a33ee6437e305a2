#pragma once

#include <cstdint>
#include <numbers>

#include "opaque/common.hpp"

namespace opaque {

// Counter-based generator: each sample index derives an independent stream
// from a 64-bit seed, so results do not depend on evaluation order.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  Vec3 sphere_direction(int dim) {
    if (dim == 2) {
      double t = uniform(0.0, 2.0 * std::numbers::pi);
      return Vec3(std::cos(t), std::sin(t), 0.0);
    }
    double z = uniform(-1.0, 1.0);
    double phi = uniform(0.0, 2.0 * std::numbers::pi);
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return Vec3(r * std::cos(phi), r * std::sin(phi), z);
  }
};

inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0xD1342543DE82EF95ULL * (index + 1)));
  g.next();
  g.next();
  return g;
}

}  // namespace opaque
