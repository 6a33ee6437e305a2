#include "opaque/convexify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "opaque/rng.hpp"

namespace opaque {

Polytope convexify_2d(const Barrier& B) {
  if (B.dim != 2) throw InvalidDataError("convexify_2d: barrier must be planar");
  std::vector<Vec3> gens;
  gens.reserve(B.pieces.size());
  for (const auto& p : B.pieces) gens.push_back(p.p[1] - p.p[0]);
  return zonotope(std::move(gens), 2);
}

namespace {

struct PairData {
  Vec3 u;
  double w;
};

// Antipodal pair reduction of an even measure: one representative direction
// per pair, carrying the one-sided weight.
std::vector<PairData> antipodal_pairs(const DirectionalMeasure& mu) {
  std::vector<PairData> pairs;
  std::vector<bool> used(mu.atoms().size(), false);
  const auto& atoms = mu.atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (used[j]) continue;
      if ((atoms[i].u + atoms[j].u).norm() <= kMergeTol) {
        used[i] = used[j] = true;
        pairs.push_back({atoms[i].u, 0.5 * (atoms[i].w + atoms[j].w)});
        break;
      }
    }
    if (!used[i]) throw InvalidDataError("solve_minkowski: unpaired atom in even measure");
  }
  return pairs;
}

struct FacetPolygon {
  double area = 0.0;
  std::vector<Vec3> corners;          // 3D positions
  std::vector<std::pair<int, double>> neighbor_edges;  // (plane index, edge length)
};

// Clips the supporting plane of facet `k` (normal u_k, offset t_k) against all
// other halfspaces <x, n_l> <= o_l. Plane indices l in [0, 2p): l < p is +u_l,
// else -u_{l-p}.
FacetPolygon facet_polygon(const std::vector<PairData>& pairs,
                           const std::vector<double>& t, int k, double box_half) {
  const Vec3& u = pairs[k].u;
  Vec3 e1 = u.cross(Vec3(std::fabs(u.x()) < 0.9 ? 1 : 0, std::fabs(u.x()) < 0.9 ? 0 : 1, 0));
  e1.normalize();
  Vec3 e2 = u.cross(e1);
  Vec3 c0 = t[k] * u;
  int p = static_cast<int>(pairs.size());

  struct Pt {
    double s, t;
  };
  std::vector<Pt> poly = {{-box_half, -box_half}, {box_half, -box_half},
                          {box_half, box_half},  {-box_half, box_half}};
  std::vector<int> label = {-1, -1, -1, -1};  // label[i]: edge from pt i to i+1

  const double eps = 1e-12 * std::max(1.0, box_half);
  for (int l = 0; l < 2 * p; ++l) {
    int q = l % p;
    if (q == k) continue;  // own pair: parallel planes never cut this facet
    Vec3 v = (l < p) ? pairs[q].u : Vec3(-pairs[q].u);
    double a = v.dot(e1), b = v.dot(e2);
    double r = t[q] - t[k] * v.dot(u);
    double len = std::hypot(a, b);
    if (len < 1e-12) {
      if (r < -eps) {
        poly.clear();
        break;
      }
      continue;
    }
    std::vector<Pt> np;
    std::vector<int> nl;
    int m = static_cast<int>(poly.size());
    for (int i = 0; i < m; ++i) {
      const Pt& P0 = poly[i];
      const Pt& P1 = poly[(i + 1) % m];
      double s0 = a * P0.s + b * P0.t - r;
      double s1 = a * P1.s + b * P1.t - r;
      bool in0 = s0 <= eps, in1 = s1 <= eps;
      if (in0) {
        np.push_back(P0);
        nl.push_back(label[i]);
      }
      if (in0 != in1) {
        double w = s0 / (s0 - s1);
        Pt X{P0.s + w * (P1.s - P0.s), P0.t + w * (P1.t - P0.t)};
        if (in0) {
          // exiting: the cut edge starts here and runs along plane l
          np.push_back(X);
          nl.push_back(l);
        } else {
          // re-entering: remainder of edge i keeps its label
          np.push_back(X);
          nl.push_back(label[i]);
        }
      }
    }
    poly = std::move(np);
    label = std::move(nl);
    if (poly.size() < 3) {
      poly.clear();
      break;
    }
  }

  FacetPolygon out;
  if (poly.size() < 3) return out;
  int m = static_cast<int>(poly.size());
  for (int i = 0; i < m; ++i) {
    const Pt& P0 = poly[i];
    const Pt& P1 = poly[(i + 1) % m];
    out.area += 0.5 * (P0.s * P1.t - P1.s * P0.t);
    double elen = std::hypot(P1.s - P0.s, P1.t - P0.t);
    if (elen > 1e-11 * std::max(1.0, box_half)) out.neighbor_edges.push_back({label[i], elen});
    out.corners.push_back(c0 + P0.s * e1 + P0.t * e2);
  }
  out.area = std::fabs(out.area);
  return out;
}

}  // namespace

MinkowskiSolution solve_minkowski(const DirectionalMeasure& mu, const MinkowskiOptions& opts) {
  if (mu.dim() != 3) throw InvalidDataError("solve_minkowski: dim must be 3");
  if (!mu.even()) throw InvalidDataError("solve_minkowski: measure must be even");
  auto report = validate_minkowski_data(mu);
  if (!report.pass) throw InvalidDataError("solve_minkowski: " + report.violation);

  auto pairs = antipodal_pairs(mu);
  int p = static_cast<int>(pairs.size());
  double mass = mu.mass();
  double c = mass / 3.0;

  Eigen::VectorXd t(p);
  double t0 = std::sqrt(mass / sphere_surface(3));
  for (int k = 0; k < p; ++k) t[k] = t0;
  if (opts.init_perturb > 0) {
    SplitMix64 rng(opts.init_seed + 1);
    for (int k = 0; k < p; ++k)
      t[k] *= 1.0 + opts.init_perturb * rng.uniform(-1.0, 1.0);
  }

  struct Eval {
    double V = 0.0;
    Eigen::VectorXd area;           // facet area per pair (the +u side)
    Eigen::MatrixXd dA;             // dA_k / dt_l
    std::vector<FacetPolygon> polys;
    bool feasible = false;
  };

  auto evaluate = [&](const Eigen::VectorXd& tt, bool need_jacobian) {
    Eval ev;
    ev.area = Eigen::VectorXd::Zero(p);
    if (need_jacobian) ev.dA = Eigen::MatrixXd::Zero(p, p);
    ev.polys.resize(p);
    double tmax = tt.maxCoeff();
    if (tt.minCoeff() <= 0 || tmax <= 0) return ev;
    std::vector<double> tv(tt.data(), tt.data() + p);
    double box = 1e3 * tmax;
    for (int k = 0; k < p; ++k) {
      auto fp = facet_polygon(pairs, tv, k, box);
      for (const auto& [l, len] : fp.neighbor_edges) {
        if (l < 0)
          throw DegenerateError("solve_minkowski: clipping box too small");
        if (need_jacobian) {
          int q = l % p;
          Vec3 v = (l < p) ? pairs[q].u : Vec3(-pairs[q].u);
          double cosang = std::clamp(v.dot(pairs[k].u), -1.0, 1.0);
          double sinang = std::sqrt(std::max(1e-16, 1.0 - cosang * cosang));
          ev.dA(k, q) += len / sinang;
          ev.dA(k, k) -= cosang * len / sinang;
        }
      }
      ev.area[k] = fp.area;
      ev.polys[k] = std::move(fp);
      ev.V += 2.0 * tv[k] * fp.area / 3.0;
    }
    ev.feasible = ev.V > 0;
    return ev;
  };

  auto objective = [&](const Eigen::VectorXd& tt, const Eval& ev) {
    double phi = 0.0;
    for (int k = 0; k < p; ++k) phi += 2.0 * pairs[k].w * tt[k];
    return phi - c * std::log(ev.V);
  };
  auto residual_of = [&](const Eval& ev) {
    // Areas after the exact rescale s^2 = c / V.
    double s2 = c / ev.V;
    double r = 0.0;
    for (int k = 0; k < p; ++k)
      r = std::max(r, std::fabs(s2 * ev.area[k] - pairs[k].w) / pairs[k].w);
    return r;
  };

  MinkowskiSolution best;
  best.residual = std::numeric_limits<double>::infinity();

  Eval ev = evaluate(t, true);
  if (!ev.feasible) throw DegenerateError("solve_minkowski: infeasible start");
  double F = objective(t, ev);

  int iter = 0;
  MinkowskiSolution sol;
  auto package = [&](const Eigen::VectorXd& tt, const Eval& evv, int iters,
                     std::vector<std::pair<int, double>> log_) {
    MinkowskiSolution s;
    double scale = std::sqrt(c / evv.V);
    Polytope P;
    P.dim = 3;
    double mean_area = evv.area.sum() / p;
    std::vector<Vec3> verts;
    for (int k = 0; k < p; ++k) {
      double A = evv.area[k] * scale * scale;
      if (evv.area[k] <= 1e-10 * mean_area) {
        s.vanished.push_back(k);
        continue;
      }
      P.facets.push_back({pairs[k].u, scale * tt[k], A});
      P.facets.push_back({-pairs[k].u, scale * tt[k], A});
      for (const auto& v : evv.polys[k].corners) {
        verts.push_back(scale * v);
        verts.push_back(-scale * v);
      }
    }
    double vtol = 1e-8 * std::max(1.0, scale * tt.maxCoeff());
    std::sort(verts.begin(), verts.end(),
              [](const Vec3& a, const Vec3& b) { return a.x() < b.x(); });
    for (std::size_t i = 0; i < verts.size(); ++i) {
      bool seen = false;
      for (std::size_t j = i; j-- > 0;) {
        if (verts[i].x() - verts[j].x() > vtol) break;
        if ((verts[i] - verts[j]).norm() <= vtol) {
          seen = true;
          break;
        }
      }
      if (!seen) P.vertices.push_back(verts[i]);
    }
    s.polytope = std::move(P);
    s.residual = residual_of(evv);
    s.iterations = iters;
    s.log = std::move(log_);
    return s;
  };

  std::vector<std::pair<int, double>> log;
  double res = residual_of(ev);
  log.push_back({0, res});

  // Iterate well past the contract tolerance: vertices of nearly-parallel
  // facet intersections amplify support errors, so the residual is driven
  // to machine precision whenever Newton keeps making progress.
  const double inner_tol = std::min(opts.tol, 1e-12);
  while (res > inner_tol && iter < opts.max_iter) {
    ++iter;
    // Newton step on F(t) = sum 2 w_k t_k - c log V(t).
    Eigen::VectorXd grad(p);
    for (int k = 0; k < p; ++k) grad[k] = 2.0 * pairs[k].w - c * 2.0 * ev.area[k] / ev.V;
    Eigen::VectorXd A2 = 2.0 * ev.area;
    Eigen::MatrixXd H = c * (A2 * A2.transpose() / (ev.V * ev.V) - 2.0 * ev.dA / ev.V);

    Eigen::VectorXd step;
    double lambda = 1e-12 * std::max(1.0, H.trace() / p);
    bool have_step = false;
    for (int attempt = 0; attempt < 12 && !have_step; ++attempt) {
      Eigen::MatrixXd Hd = H + lambda * Eigen::MatrixXd::Identity(p, p);
      Eigen::LDLT<Eigen::MatrixXd> ldlt(Hd);
      if (ldlt.info() == Eigen::Success) {
        step = ldlt.solve(-grad);
        if (step.allFinite() && grad.dot(step) < 0) have_step = true;
      }
      lambda = std::max(lambda * 10.0, 1e-10);
    }
    if (!have_step) step = -grad;

    // Full Newton step first, judged by the residual: near the optimum the
    // objective decrease drops below double rounding noise while the
    // residual (facet areas are evaluated to ~1e-13) stays meaningful.
    bool moved = false;
    {
      Eigen::VectorXd tn = t + step;
      if (tn.minCoeff() > 0) {
        Eval evn = evaluate(tn, true);
        if (evn.feasible && residual_of(evn) < res) {
          t = tn;
          ev = std::move(evn);
          F = objective(t, ev);
          moved = true;
        }
      }
    }
    if (!moved) {
      double slope = grad.dot(step);
      double alpha = 0.5;
      for (int ls = 0; ls < 60; ++ls) {
        Eigen::VectorXd tn = t + alpha * step;
        if (tn.minCoeff() > 0) {
          Eval evn = evaluate(tn, true);
          if (evn.feasible) {
            double Fn = objective(tn, evn);
            if (Fn <= F + 1e-4 * alpha * slope) {
              t = tn;
              ev = std::move(evn);
              F = Fn;
              moved = true;
              break;
            }
          }
        }
        alpha *= 0.5;
      }
    }
    res = residual_of(ev);
    log.push_back({iter, res});
    if (!moved) break;  // numerical floor reached; residual decides below
  }

  sol = package(t, ev, iter, log);
  if (sol.residual > opts.tol)
    throw NotConvergedError("solve_minkowski: no convergence after " +
                                std::to_string(iter) + " iterations",
                            std::move(sol));
  return sol;
}

Polytope convexify(const Barrier& B) {
  if (B.dim == 2) return convexify_2d(B);
  DirectionalMeasure mu = orientation_measure(B);
  auto report = validate_minkowski_data(mu);
  if (!report.pass) throw InvalidDataError("convexify: " + report.violation);
  return solve_minkowski(mu).polytope;
}

}  // namespace opaque
