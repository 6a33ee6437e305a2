#pragma once

// Shared generators and oracles for the unit and acceptance suites.

#include <opaque/convexify.hpp>
#include <opaque/direction_net.hpp>
#include <opaque/measures.hpp>
#include <opaque/rng.hpp>
#include <opaque/scenarios.hpp>
#include <opaque/stability.hpp>
#include <opaque/weak_barrier.hpp>

#include <algorithm>
#include <vector>

namespace testutil {

using namespace opaque;

inline Polytope random_polygon(SplitMix64& rng, int npts = 8) {
  for (;;) {
    std::vector<Vec3> pts;
    for (int i = 0; i < npts; ++i)
      pts.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1), 0.0);
    try {
      return Polytope::from_vertices(2, pts);
    } catch (const DegenerateError&) {
    }
  }
}

inline Polytope random_symmetric_polygon(SplitMix64& rng, int npts = 5) {
  for (;;) {
    std::vector<Vec3> pts;
    for (int i = 0; i < npts; ++i) {
      Vec3 p(rng.uniform(-1, 1), rng.uniform(-1, 1), 0.0);
      pts.push_back(p);
      pts.push_back(-p);
    }
    try {
      Polytope P = Polytope::from_vertices(2, pts);
      if (!P.lower_dimensional) return P;
    } catch (const DegenerateError&) {
    }
  }
}

inline Polytope random_polytope3(SplitMix64& rng, int npts = 10) {
  for (;;) {
    std::vector<Vec3> pts;
    for (int i = 0; i < npts; ++i)
      pts.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    try {
      return Polytope::from_vertices(3, pts);
    } catch (const DegenerateError&) {
    }
  }
}

inline Polytope random_symmetric_polytope3(SplitMix64& rng, int npairs = 6) {
  for (;;) {
    std::vector<Vec3> pts;
    for (int i = 0; i < npairs; ++i) {
      Vec3 p(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
      pts.push_back(p);
      pts.push_back(-p);
    }
    try {
      Polytope P = Polytope::from_vertices(3, pts);
      if (!P.lower_dimensional) return P;
    } catch (const DegenerateError&) {
    }
  }
}

inline Polytope random_body(SplitMix64& rng, int dim, int npts = 8) {
  return dim == 2 ? random_polygon(rng, npts) : random_polytope3(rng, npts);
}

inline Polytope random_symmetric_body(SplitMix64& rng, int dim) {
  return dim == 2 ? random_symmetric_polygon(rng) : random_symmetric_polytope3(rng);
}

inline Barrier random_segments(SplitMix64& rng, int count) {
  std::vector<std::array<Vec3, 2>> segs;
  for (int i = 0; i < count; ++i) {
    Vec3 a(rng.uniform(-1, 1), rng.uniform(-1, 1), 0.0);
    Vec3 d(rng.uniform(-1, 1), rng.uniform(-1, 1), 0.0);
    while (d.norm() < 0.05) d = Vec3(rng.uniform(-1, 1), rng.uniform(-1, 1), 0.0);
    segs.push_back({a, a + d});
  }
  return Barrier::from_segments(segs);
}

// Largest t with t * inner contained in outer (both containing the origin).
inline double containment_scale(const Polytope& inner, const Polytope& outer) {
  double t = std::numeric_limits<double>::infinity();
  for (const auto& v : inner.vertices)
    for (const auto& f : outer.facets) {
      double d = f.normal.dot(v);
      if (d > 1e-14) t = std::min(t, f.offset / d);
    }
  return t;
}

// Nested origin-symmetric pair with a width gap bounded away from zero.
inline std::pair<Polytope, Polytope> nested_symmetric_pair(SplitMix64& rng, int dim) {
  Polytope K = random_symmetric_body(rng, dim);
  Polytope inner = random_symmetric_body(rng, dim);
  double t = containment_scale(inner, K) * rng.uniform(0.3, 0.9);
  return {scaled(inner, t), K};
}

// Scales a random segment set until it is a weak barrier of the unit square,
// with a small safety factor past the threshold.
inline Barrier random_weak_barrier_of_square(SplitMix64& rng, int segments = 5) {
  Polytope Q = centered_unit_square();
  for (;;) {
    Barrier B = random_segments(rng, segments);
    DirectionalMeasure mu = orientation_measure(B);
    auto rep = validate_minkowski_data(mu);
    if (!rep.spans) continue;
    double lo = 0.0, hi = 64.0;
    if (is_weak_barrier(B.scaled(hi), Q).verdict != Verdict::True) continue;
    for (int it = 0; it < 60; ++it) {
      double mid = 0.5 * (lo + hi);
      if (is_weak_barrier(B.scaled(mid), Q).verdict == Verdict::True)
        hi = mid;
      else
        lo = mid;
    }
    return B.scaled(hi * (1.0 + 1e-6));
  }
}

// Brute-force Minkowski sum oracle: hull of all pairwise vertex sums.
inline Polytope minkowski_brute_force(const Polytope& P, const Polytope& Q) {
  std::vector<Vec3> sums;
  for (const auto& p : P.vertices)
    for (const auto& q : Q.vertices) sums.push_back(p + q);
  return Polytope::from_vertices(2, sums);
}

inline double hausdorff_vertex_distance(const std::vector<Vec3>& A,
                                        const std::vector<Vec3>& B) {
  auto one_sided = [](const std::vector<Vec3>& X, const std::vector<Vec3>& Y) {
    double worst = 0.0;
    for (const auto& x : X) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& y : Y) best = std::min(best, (x - y).norm());
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_sided(A, B), one_sided(B, A));
}

inline Vec3 vertex_centroid(const std::vector<Vec3>& v) {
  Vec3 c = Vec3::Zero();
  for (const auto& x : v) c += x;
  return Vec3(c / static_cast<double>(v.size()));
}

}  // namespace testutil
