#pragma once

#include <cstdint>
#include <optional>

#include "opaque/measures.hpp"

namespace opaque {

enum class Verdict { True, False, Undecided };

// Three-valued decision. True carries a certified non-negative margin (exact
// in 2D, net resolution + Lipschitz slack in 3D); False carries a witness
// direction with a strict violation.
struct CertifiedBool {
  Verdict verdict = Verdict::Undecided;
  double margin = 0.0;
  std::optional<Vec3> witness;
  int net_level = -1;      // -1: exact 2D decision
  double net_delta = 0.0;  // covering radius of the certifying net
};

struct WeakBarrierOptions {
  int start_level = 4;
  int max_level = 7;
};

// Total projection area of B onto u^perp counted with multiplicities:
// sum over pieces of |<u, piece normal>| * piece measure.
double multiplicity_projection_area(const Barrier& B, const Vec3& u);

// Core test: does the projection function of barrier_mu dominate the one of
// body_mu everywhere? Exact via projection-body polygons in 2D, certified
// net test in 3D.
CertifiedBool projection_dominates(const DirectionalMeasure& barrier_mu,
                                   const DirectionalMeasure& body_mu, int dim,
                                   const WeakBarrierOptions& opts = {});

CertifiedBool is_weak_barrier(const Barrier& B, const Polytope& K,
                              const WeakBarrierOptions& opts = {});

// Planar characterization: Blaschke body of K contained in co(B). Exact;
// must agree with is_weak_barrier.
CertifiedBool is_weak_barrier_2d_prop1(const Barrier& B, const Polytope& K);

struct LineSample {
  Vec3 direction;
  Vec3 base;  // point in direction^perp
  int barrier_hits = 0;
  bool body_hit = false;
};

// Number of pieces of B met by the line {base + t * dir}.
int line_barrier_hits(const Barrier& B, const Vec3& base, const Vec3& dir);

// Line through a point of K|u^perp with direction u; deterministic per
// (seed, index).
LineSample sample_line(const Polytope& K, const Barrier& B, std::uint64_t seed,
                       std::uint64_t index);

struct McReport {
  double miss_fraction = 0.0;
  double ci_low = 0.0, ci_high = 0.0;  // binomial 95% interval
  std::uint64_t lines = 0;
  std::uint64_t misses = 0;
  std::uint64_t seed = 0;
};

// Samples N lines hitting K (direction uniform on the sphere, base uniform in
// the projection of K) and reports the fraction missing B.
McReport strong_barrier_mc(const Barrier& B, const Polytope& K,
                           std::uint64_t n_lines, std::uint64_t seed);

// S(B) - S(boundary K) / 2.
double jones_deficit(const Barrier& B, const Polytope& K);

struct CylinderReport {
  double s = 0.0;
  int icosphere_level = 3;
  CertifiedBool projection_containment;  // Pi K inside Pi co(B)
  bool blaschke_body_contained = true;   // nabla K inside co(B) (expected false)
  Vec3 violating_vertex = Vec3::Zero();
  double max_projection_area = 0.0;
  double projection_area_bound = 0.0;  // 1 + 1/s^2
  bool passed = false;
};

// Thin long cylinder against a ball-shaped convexification: the projection
// bodies nest although the bodies do not.
CylinderReport cylinder_counterexample(double s, int icosphere_level = 3);

}  // namespace opaque
