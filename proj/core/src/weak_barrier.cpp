#include "opaque/weak_barrier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "opaque/convexify.hpp"
#include "opaque/direction_net.hpp"
#include "opaque/hull.hpp"
#include "opaque/rng.hpp"
#include "opaque/scenarios.hpp"

namespace opaque {

double multiplicity_projection_area(const Barrier& B, const Vec3& u) {
  double s = 0.0;
  for (const auto& p : B.pieces) s += p.measure * std::fabs(u.dot(p.normal));
  return s;
}

namespace {

// --- exact 2D dominance ----------------------------------------------------
//
// g(theta) = projfn(muA, u) - projfn(muB, u) is piecewise sinusoidal with
// breakpoints where u becomes perpendicular to an atom. On each arc both
// supporting points are constant, so the minimum is attained at an arc
// endpoint or where u is antiparallel to the difference of supporting points.

Vec3 support_point(const DirectionalMeasure& mu, const Vec3& u) {
  Vec3 v = Vec3::Zero();
  for (const auto& a : mu.atoms()) v += (u.dot(a.u) >= 0 ? 0.5 : -0.5) * a.w * a.u;
  return v;
}

struct MinGap {
  double value;
  Vec3 argmin;
};

MinGap exact_min_gap_2d(const DirectionalMeasure& muA, const DirectionalMeasure& muB) {
  std::vector<double> brk;
  auto add_breaks = [&](const DirectionalMeasure& mu) {
    for (const auto& a : mu.atoms()) {
      double base = std::atan2(a.u.y(), a.u.x());
      for (double off : {std::numbers::pi / 2, 3 * std::numbers::pi / 2}) {
        double t = std::fmod(base + off, 2 * std::numbers::pi);
        if (t < 0) t += 2 * std::numbers::pi;
        brk.push_back(t);
      }
    }
  };
  add_breaks(muA);
  add_breaks(muB);
  std::sort(brk.begin(), brk.end());
  brk.erase(std::unique(brk.begin(), brk.end(),
                        [](double a, double b) { return std::fabs(a - b) < 1e-12; }),
            brk.end());

  auto dir = [](double t) { return Vec3(std::cos(t), std::sin(t), 0.0); };
  MinGap best{std::numeric_limits<double>::infinity(), Vec3::UnitX()};
  auto consider = [&](double g, const Vec3& u) {
    if (g < best.value) best = {g, u};
  };

  int m = static_cast<int>(brk.size());
  for (int i = 0; i < m; ++i) {
    double a = brk[i];
    double b = (i + 1 < m) ? brk[i + 1] : brk[0] + 2 * std::numbers::pi;
    double mid = 0.5 * (a + b);
    Vec3 d = support_point(muA, dir(mid)) - support_point(muB, dir(mid));
    consider(d.dot(dir(a)), dir(a));
    consider(d.dot(dir(b)), dir(b));
    if (d.norm() > kTinyTol) {
      double phi = std::atan2(-d.y(), -d.x());
      for (double cand : {phi, phi + 2 * std::numbers::pi}) {
        if (cand > a + 1e-15 && cand < b - 1e-15) consider(-d.norm(), dir(cand));
      }
    }
  }
  return best;
}

// Rigorous origin-circumradius bound for the projection body of mu: both
// mass/2 and sqrt(mass * lambda_max(sum w uu^T))/2 dominate sup h(Pi mu, .).
double projection_body_radius_bound(const DirectionalMeasure& mu) {
  double mass = mu.mass();
  Mat3 gram = Mat3::Zero();
  for (const auto& a : mu.atoms()) gram += a.w * a.u * a.u.transpose();
  Eigen::SelfAdjointEigenSolver<Mat3> es(gram);
  double lmax = std::max(0.0, es.eigenvalues().maxCoeff());
  return 0.5 * std::min(mass, std::sqrt(mass * lmax));
}

}  // namespace

CertifiedBool projection_dominates(const DirectionalMeasure& barrier_mu,
                                   const DirectionalMeasure& body_mu, int dim,
                                   const WeakBarrierOptions& opts) {
  if (barrier_mu.dim() != dim || body_mu.dim() != dim)
    throw InvalidDataError("projection_dominates: dimension mismatch");
  CertifiedBool out;
  if (dim == 2) {
    MinGap gap = exact_min_gap_2d(barrier_mu, body_mu);
    out.net_level = -1;
    out.net_delta = 0.0;
    if (gap.value < -kIncidenceTol) {
      out.verdict = Verdict::False;
      out.margin = gap.value;
      out.witness = gap.argmin;
    } else {
      out.verdict = Verdict::True;
      out.margin = std::max(0.0, gap.value);
    }
    return out;
  }

  double lip = projection_body_radius_bound(barrier_mu) + projection_body_radius_bound(body_mu);
  double gmin = std::numeric_limits<double>::infinity();
  Vec3 argmin = Vec3::UnitZ();
  for (int level = opts.start_level; level <= opts.max_level; ++level) {
    SphereNet net = sphere_net(3, level);
    gmin = std::numeric_limits<double>::infinity();
    for (const auto& u : net.points) {
      double g = projection_function(barrier_mu, u) - projection_function(body_mu, u);
      if (g < gmin) {
        gmin = g;
        argmin = u;
      }
    }
    out.net_level = level;
    out.net_delta = net.covering_radius;
    if (gmin < -kIncidenceTol) {
      out.verdict = Verdict::False;
      out.margin = gmin;
      out.witness = argmin;
      return out;
    }
    if (gmin >= lip * net.covering_radius) {
      out.verdict = Verdict::True;
      out.margin = gmin - lip * net.covering_radius;
      return out;
    }
  }
  out.verdict = Verdict::Undecided;
  out.margin = gmin;
  return out;
}

CertifiedBool is_weak_barrier(const Barrier& B, const Polytope& K,
                              const WeakBarrierOptions& opts) {
  if (K.lower_dimensional) throw InvalidDataError("is_weak_barrier: body must be full-dimensional");
  if (B.dim != K.dim) throw InvalidDataError("is_weak_barrier: dimension mismatch");
  return projection_dominates(orientation_measure(B), surface_area_measure(K), K.dim, opts);
}

CertifiedBool is_weak_barrier_2d_prop1(const Barrier& B, const Polytope& K) {
  if (K.dim != 2 || B.dim != 2) throw InvalidDataError("is_weak_barrier_2d_prop1: dim must be 2");
  if (K.lower_dimensional) throw InvalidDataError("is_weak_barrier_2d_prop1: body must be full-dimensional");
  Polytope coB = convexify_2d(B);
  Polytope nablaK = scaled(minkowski_sum_2d(K, reflected(K)), 0.5);
  CertifiedBool out;
  out.net_level = -1;
  double worst = std::numeric_limits<double>::infinity();
  Vec3 witness = Vec3::UnitX();
  for (const auto& f : coB.facets) {
    double slack = f.offset - support(nablaK, f.normal);
    if (slack < worst) {
      worst = slack;
      witness = f.normal;
    }
  }
  if (worst < -kIncidenceTol) {
    out.verdict = Verdict::False;
    out.margin = worst;
    out.witness = witness;
  } else {
    out.verdict = Verdict::True;
    out.margin = std::max(0.0, worst);
  }
  return out;
}

namespace {

int count_segment_hits_2d(const Barrier& B, const Vec3& p, const Vec3& u) {
  int hits = 0;
  for (const auto& piece : B.pieces) {
    Vec3 ra = piece.p[0] - p, rb = piece.p[1] - p;
    double sa = u.x() * ra.y() - u.y() * ra.x();
    double sb = u.x() * rb.y() - u.y() * rb.x();
    double tol = 1e-12 * std::max({1.0, ra.norm(), rb.norm()});
    if (std::min(sa, sb) <= tol && std::max(sa, sb) >= -tol) ++hits;
  }
  return hits;
}

int count_triangle_hits_3d(const Barrier& B, const Vec3& p, const Vec3& u) {
  int hits = 0;
  for (const auto& piece : B.pieces) {
    const Vec3 &a = piece.p[0], &b = piece.p[1], &c = piece.p[2];
    Vec3 m = (b - a).cross(c - a);
    double denom = u.dot(m);
    if (std::fabs(denom) < 1e-14 * m.norm()) continue;  // line parallel to the plane
    double tau = (a - p).dot(m) / denom;
    Vec3 q = p + tau * u;
    double mm = m.squaredNorm();
    double beta = (q - a).cross(c - a).dot(m) / mm;
    double gamma = (b - a).cross(q - a).dot(m) / mm;
    const double tol = 1e-9;
    if (beta >= -tol && gamma >= -tol && beta + gamma <= 1.0 + tol) ++hits;
  }
  return hits;
}

}  // namespace

int line_barrier_hits(const Barrier& B, const Vec3& base, const Vec3& dir) {
  return B.dim == 2 ? count_segment_hits_2d(B, base, dir)
                    : count_triangle_hits_3d(B, base, dir);
}

LineSample sample_line(const Polytope& K, const Barrier& B, std::uint64_t seed,
                       std::uint64_t index) {
  SplitMix64 rng = substream(seed, index);
  LineSample ls;
  ls.body_hit = true;
  if (K.dim == 2) {
    Vec3 u = rng.sphere_direction(2);
    Vec3 e = rot90(u);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& v : K.vertices) {
      double t = e.dot(v);
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
    double t = rng.uniform(lo, hi);
    ls.direction = u;
    ls.base = t * e;
    ls.barrier_hits = count_segment_hits_2d(B, ls.base, u);
    return ls;
  }
  Vec3 u = rng.sphere_direction(3);
  Vec3 axis = std::fabs(u.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  Vec3 e1 = u.cross(axis).normalized();
  Vec3 e2 = u.cross(e1);
  std::vector<Vec3> proj;
  proj.reserve(K.vertices.size());
  for (const auto& v : K.vertices) proj.emplace_back(e1.dot(v), e2.dot(v), 0.0);
  auto hull = convex_hull_2d(proj);
  double sx0 = 1e300, sx1 = -1e300, sy0 = 1e300, sy1 = -1e300;
  for (const auto& q : hull) {
    sx0 = std::min(sx0, q.x());
    sx1 = std::max(sx1, q.x());
    sy0 = std::min(sy0, q.y());
    sy1 = std::max(sy1, q.y());
  }
  int nh = static_cast<int>(hull.size());
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    double x = rng.uniform(sx0, sx1), y = rng.uniform(sy0, sy1);
    bool inside = true;
    for (int i = 0; i < nh && inside; ++i) {
      const Vec3& A = hull[i];
      const Vec3& Bv = hull[(i + 1) % nh];
      if ((Bv.x() - A.x()) * (y - A.y()) - (Bv.y() - A.y()) * (x - A.x()) < -1e-12)
        inside = false;
    }
    if (inside) {
      ls.direction = u;
      ls.base = x * e1 + y * e2;
      ls.barrier_hits = count_triangle_hits_3d(B, ls.base, u);
      return ls;
    }
  }
  throw DegenerateError("sample_line: rejection sampling failed");
}

McReport strong_barrier_mc(const Barrier& B, const Polytope& K,
                           std::uint64_t n_lines, std::uint64_t seed) {
  if (n_lines < 1) throw InvalidDataError("strong_barrier_mc: need at least one line");
  if (K.lower_dimensional) throw InvalidDataError("strong_barrier_mc: body must be full-dimensional");
  std::uint64_t misses = 0;
  for (std::uint64_t i = 0; i < n_lines; ++i) {
    LineSample ls = sample_line(K, B, seed, i);
    if (ls.barrier_hits == 0) ++misses;
  }
  McReport r;
  r.lines = n_lines;
  r.misses = misses;
  r.seed = seed;
  r.miss_fraction = static_cast<double>(misses) / static_cast<double>(n_lines);
  double p = r.miss_fraction;
  double half = 1.96 * std::sqrt(std::max(0.0, p * (1 - p) / static_cast<double>(n_lines)));
  r.ci_low = std::max(0.0, p - half);
  r.ci_high = std::min(1.0, p + half);
  return r;
}

double jones_deficit(const Barrier& B, const Polytope& K) {
  return B.surface_area() - 0.5 * surface_area(K);
}

CylinderReport cylinder_counterexample(double s, int icosphere_level) {
  if (!(s > 2.0)) throw InvalidDataError("cylinder_counterexample: requires s > 2");
  CylinderReport rep;
  rep.s = s;
  rep.icosphere_level = icosphere_level;
  rep.projection_area_bound = 1.0 + 1.0 / (s * s);

  Polytope K = cylinder_polytope(s);
  Polytope coB = icosphere_polytope(icosphere_level);
  DirectionalMeasure muK = surface_area_measure(K);
  DirectionalMeasure muB = surface_area_measure(coB);

  rep.projection_containment = projection_dominates(muB, muK, 3);

  // nabla K = K here (the cylinder is origin-symmetric), checked via the
  // measure, then tested against co(B) exactly.
  if (!blaschke_measure(K).even()) throw InvalidDataError("cylinder body not symmetric");
  rep.blaschke_body_contained = true;
  double worst = 0.0;
  for (const auto& v : K.vertices) {
    for (const auto& f : coB.facets) {
      double viol = f.normal.dot(v) - f.offset;
      if (viol > worst) {
        worst = viol;
        rep.violating_vertex = v;
      }
    }
    if (!contains_point(coB, v)) rep.blaschke_body_contained = false;
  }

  double maxproj = 0.0;
  SphereNet net = sphere_net(3, 5);
  for (const auto& u : net.points) maxproj = std::max(maxproj, projection_function(muK, u));
  for (const auto& u : random_directions(3, 1000, 0x9a77))
    maxproj = std::max(maxproj, projection_function(muK, u));
  rep.max_projection_area = maxproj;

  rep.passed = rep.projection_containment.verdict == Verdict::True &&
               !rep.blaschke_body_contained &&
               rep.max_projection_area <= rep.projection_area_bound + kIncidenceTol &&
               rep.projection_area_bound < 2 * std::numbers::pi;
  return rep;
}

}  // namespace opaque
