#include "opaque/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "opaque/convexify.hpp"
#include "opaque/direction_net.hpp"
#include "opaque/lp.hpp"

namespace opaque {

double bounded_lipschitz_distance(const DirectionalMeasure& mu,
                                  const DirectionalMeasure& nu) {
  if (mu.dim() != nu.dim())
    throw InvalidDataError("bounded_lipschitz_distance: dimension mismatch");

  // Union of supports with signed weight differences.
  std::vector<Vec3> dirs;
  std::vector<double> delta;
  auto add = [&](const Vec3& u, double w) {
    for (std::size_t i = 0; i < dirs.size(); ++i)
      if ((dirs[i] - u).norm() <= kMergeTol) {
        delta[i] += w;
        return;
      }
    dirs.push_back(u);
    delta.push_back(w);
  };
  for (const auto& a : mu.atoms()) add(a.u, a.w);
  for (const auto& a : nu.atoms()) add(a.u, -a.w);

  int m = static_cast<int>(dirs.size());
  double total = 0.0;
  for (double d : delta) total = std::max(total, std::fabs(d));
  if (m == 0 || total <= 1e-15) return 0.0;

  // Variables: g_1..g_m (= f_j + a >= 0), a, L.
  // max sum delta_j g_j - (sum delta_j) a
  // s.t. a + L <= 1, g_j <= 2a, |g_i - g_j| <= L |u_i - u_j|.
  int nv = m + 2;
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  {
    std::vector<double> row(nv, 0.0);
    row[m] = 1.0;
    row[m + 1] = 1.0;
    A.push_back(row);
    b.push_back(1.0);
  }
  for (int j = 0; j < m; ++j) {
    std::vector<double> row(nv, 0.0);
    row[j] = 1.0;
    row[m] = -2.0;
    A.push_back(row);
    b.push_back(0.0);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      double d = (dirs[i] - dirs[j]).norm();
      std::vector<double> row(nv, 0.0);
      row[i] = 1.0;
      row[j] = -1.0;
      row[m + 1] = -d;
      A.push_back(row);
      b.push_back(0.0);
      row[i] = -1.0;
      row[j] = 1.0;
      A.push_back(row);
      b.push_back(0.0);
    }
  std::vector<double> c(nv, 0.0);
  double dsum = 0.0;
  for (int j = 0; j < m; ++j) {
    c[j] = delta[j];
    dsum += delta[j];
  }
  c[m] = -dsum;

  auto res = SimplexSolver::maximize(A, b, c);
  if (res.status != SimplexSolver::Status::Optimal)
    throw std::runtime_error("bounded_lipschitz_distance: LP did not solve");
  return std::max(0.0, res.value);
}

DlpBound levy_prokhorov_upper_bound(const DirectionalMeasure& mu,
                                    const DirectionalMeasure& nu) {
  DlpBound out;
  double d = bounded_lipschitz_distance(mu, nu);
  if (mu.mass() <= 0) {
    out.reason = "mu has zero total mass";
    return out;
  }
  if (d > 1.0) {
    out.reason = "d_bL exceeds 1";
    return out;
  }
  out.applicable = true;
  out.value = (1.0 + std::sqrt(3.0 + mu.mass())) * std::sqrt(d);
  return out;
}

namespace {

void check_antipodal_closed(const std::vector<Vec3>& V) {
  for (const auto& v : V) {
    bool found = false;
    for (const auto& w : V)
      if ((v + w).norm() <= kMergeTol) {
        found = true;
        break;
      }
    if (!found) throw InvalidDataError("direction set V must be closed under antipodes");
  }
}

}  // namespace

double jbeta_mass(const DirectionalMeasure& m, const std::vector<Vec3>& V, double beta) {
  if (!(beta > 0 && beta < std::numbers::pi / 4))
    throw InvalidDataError("jbeta_mass: beta must lie in (0, pi/4)");
  if (V.empty()) throw InvalidDataError("jbeta_mass: empty direction set");
  check_antipodal_closed(V);
  double s = 0.0;
  for (const auto& a : m.atoms()) {
    bool far = true;
    for (const auto& v : V)
      if (angle_between(a.u, v.normalized()) <= beta) {
        far = false;
        break;
      }
    if (far) s += a.w;
  }
  return s;
}

double corollary_witness_function(const std::vector<Vec3>& V, double beta, const Vec3& u) {
  if (!(beta > 0 && beta < std::numbers::pi / 2))
    throw InvalidDataError("corollary_witness_function: beta must lie in (0, pi/2)");
  double cb = std::cos(beta);
  double gmax = 0.0;
  for (const auto& v : V) {
    double g = (v.normalized().dot(u) - cb) / (1.0 - cb);
    gmax = std::max(gmax, g);
  }
  return 1.0 - std::min(1.0, gmax);
}

double stability_exponent(int n, double eps) {
  return 2.0 * (n + 1) / (static_cast<double>(n) * n * (n + 4)) - eps;
}

namespace {

void require_symmetric(const Polytope& P, const char* who) {
  std::vector<Vec3> dirs;
  for (const auto& f : P.facets) dirs.push_back(f.normal);
  for (const auto& v : P.vertices)
    if (v.norm() > kTinyTol) dirs.push_back(v.normalized());
  for (const auto& u : dirs) {
    double a = support(P, u), b = support(P, Vec3(-u));
    if (std::fabs(a - b) > kIncidenceTol * std::max(1.0, std::fabs(a)))
      throw InvalidDataError(std::string(who) + ": body must be origin-symmetric");
  }
}

void require_nested(const Polytope& inner, const Polytope& outer) {
  for (const auto& v : inner.vertices)
    if (!contains_point(outer, v, 1e-9))
      throw ContainmentError("lemma check: K' is not contained in K");
}

std::vector<Vec3> delta_inf_candidates(const Polytope& Kp, const Polytope& K) {
  std::vector<Vec3> dirs;
  SphereNet net = sphere_net(K.dim, 5);
  dirs = net.points;
  for (const auto& f : K.facets) dirs.push_back(f.normal);
  for (const auto& f : Kp.facets) dirs.push_back(f.normal);
  auto add_vertex_dirs = [&](const Polytope& P) {
    for (const auto& v : P.vertices)
      if (v.norm() > kTinyTol) dirs.push_back(v.normalized());
  };
  add_vertex_dirs(K);
  add_vertex_dirs(Kp);
  if (K.vertices.size() * Kp.vertices.size() <= 40000) {
    for (const auto& v : K.vertices)
      for (const auto& w : Kp.vertices) {
        Vec3 d = v - w;
        if (d.norm() > kTinyTol) dirs.push_back(d.normalized());
      }
  }
  return dirs;
}

double lemma_constant(int n) {
  if (n == 2) return std::numbers::pi / std::sqrt(2.0);
  // (n omega_n / kappa_{n-1})^(1/n) * sqrt(2)^(1 - 5/n) * (omega_n / (2 kappa_{n-1}))^(1 - 1/n)
  double on = sphere_surface(n), kn1 = unit_ball_volume(n - 1);
  return std::pow(n * on / kn1, 1.0 / n) *
         std::pow(std::sqrt(2.0), 1.0 - 5.0 / n) *
         std::pow(on / (2.0 * kn1), 1.0 - 1.0 / n);
}

}  // namespace

LemmaCheck lemma1_check(const Polytope& Kprime, const Polytope& K) {
  if (Kprime.dim != K.dim) throw InvalidDataError("lemma1_check: dimension mismatch");
  if (K.lower_dimensional || Kprime.lower_dimensional)
    throw InvalidDataError("lemma1_check: bodies must be full-dimensional");
  require_symmetric(K, "lemma1_check");
  require_symmetric(Kprime, "lemma1_check");
  require_nested(Kprime, K);
  int n = K.dim;
  double dinf = 0.0;
  for (const auto& u : delta_inf_candidates(Kprime, K))
    dinf = std::max(dinf, support(K, u) - support(Kprime, u));
  double w = mean_width(K), wp = mean_width(Kprime);
  double dw = std::max(0.0, w - wp);
  LemmaCheck r;
  r.lhs = dinf;
  r.rhs = lemma_constant(n) * std::pow(w, 1.0 - 1.0 / n) * std::pow(dw, 1.0 / n);
  r.ok = r.lhs <= r.rhs * (1.0 + 1e-4) + 1e-12;
  return r;
}

LemmaCheck lemma3_check(const Polytope& Kprime, const Polytope& K) {
  if (Kprime.dim != K.dim) throw InvalidDataError("lemma3_check: dimension mismatch");
  if (K.lower_dimensional || Kprime.lower_dimensional)
    throw InvalidDataError("lemma3_check: bodies must be full-dimensional");
  require_symmetric(K, "lemma3_check");
  require_symmetric(Kprime, "lemma3_check");
  require_nested(Kprime, K);
  int n = K.dim;

  double l2sq = 0.0;
  if (n == 2) {
    const int N = 2048;
    for (int k = 0; k < N; ++k) {
      double t = 2.0 * std::numbers::pi * k / N;
      Vec3 u(std::cos(t), std::sin(t), 0.0);
      double f = support(K, u) - support(Kprime, u);
      l2sq += f * f;
    }
    l2sq *= 2.0 * std::numbers::pi / N;
  } else {
    TriMesh mesh = icosphere_mesh(5);
    for (const auto& t : mesh.tris) {
      const Vec3 &a = mesh.pts[t[0]], &b = mesh.pts[t[1]], &c = mesh.pts[t[2]];
      // spherical triangle area (Oosterom-Strackee)
      double num = a.dot(b.cross(c));
      double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
      double area = std::fabs(2.0 * std::atan2(num, den));
      Vec3 u = (a + b + c).normalized();
      double f = support(K, u) - support(Kprime, u);
      l2sq += area * f * f;
    }
  }

  double w = mean_width(K), wp = mean_width(Kprime);
  double dw = std::max(0.0, w - wp);
  LemmaCheck r;
  r.lhs = std::sqrt(l2sq);
  r.rhs = sphere_surface(n) * lemma_constant(n) / 2.0 *
          std::pow(w, 1.0 - 1.0 / n) * std::pow(dw, 1.0 + 1.0 / n);
  r.ok = r.lhs <= r.rhs * (1.0 + 1e-4) + 1e-12;
  return r;
}

StabilityReport stability_report(const Barrier& B, const Polytope& K, double eps) {
  if (K.lower_dimensional) throw InvalidDataError("stability_report: body must be full-dimensional");
  CertifiedBool weak = is_weak_barrier(B, K);
  if (weak.verdict != Verdict::True)
    throw InvalidDataError("stability_report: barrier is not a verified weak barrier for the body");

  StabilityReport rep;
  rep.dim = K.dim;
  rep.eps = eps;
  rep.deficit = jones_deficit(B, K);
  DirectionalMeasure nabla = blaschke_measure(K);
  DirectionalMeasure mustar = orientation_measure(B);
  rep.dbl = bounded_lipschitz_distance(nabla, mustar);
  rep.exponent = stability_exponent(K.dim, eps);
  rep.barrier_area = B.surface_area();
  rep.inradius_K = inradius(K);

  double delta = std::max(0.0, rep.deficit);
  if (delta <= kIncidenceTol && rep.dbl <= kIncidenceTol) {
    rep.equality_case = true;
    rep.ratio = std::numeric_limits<double>::quiet_NaN();
  } else if (delta <= kIncidenceTol) {
    rep.ratio = std::numeric_limits<double>::infinity();
  } else {
    rep.ratio = rep.dbl / std::pow(delta, rep.exponent);
  }

  // Realizing body of the Blaschke measure, for the report.
  Polytope nablaK = (K.dim == 2)
                        ? scaled(minkowski_sum_2d(K, reflected(K)), 0.5)
                        : solve_minkowski(nabla).polytope;
  rep.blaschke_inradius = inradius(nablaK);
  rep.blaschke_surface_area = surface_area(nablaK);

  std::vector<Vec3> V;
  for (const auto& a : nabla.atoms()) V.push_back(a.u);
  const double pi = std::numbers::pi;
  for (double beta : {pi / 64, pi / 32, pi / 16, pi / 8, 3 * pi / 16, pi / 4 - pi / 64}) {
    BetaRow row;
    row.beta = beta;
    row.jbeta = jbeta_mass(mustar, V, beta);
    row.steinerb_rhs = 2.0 * delta / (1.0 - std::cos(beta));
    row.chain_rhs = 2.0 * rep.dbl / (1.0 - std::cos(beta));
    rep.beta_table.push_back(row);
  }
  return rep;
}

}  // namespace opaque
