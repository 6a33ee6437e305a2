#include "opaque/measures.hpp"

#include <algorithm>
#include <cmath>

namespace opaque {

DirectionalMeasure::DirectionalMeasure(int dim, std::vector<Atom> atoms, bool even)
    : dim_(dim), even_(even) {
  if (dim != 2 && dim != 3) throw InvalidDataError("DirectionalMeasure: dim must be 2 or 3");
  for (auto& a : atoms) {
    if (!(a.w > 0)) throw InvalidDataError("DirectionalMeasure: weights must be positive");
    a.u = Direction(a.u, dim).vec();
    bool merged = false;
    for (auto& b : atoms_) {
      if ((a.u - b.u).norm() <= kMergeTol) {
        b.w += a.w;
        merged = true;
        break;
      }
    }
    if (!merged) atoms_.push_back(a);
  }
  if (even_) {
    for (const auto& a : atoms_) {
      bool paired = false;
      for (const auto& b : atoms_)
        if ((a.u + b.u).norm() <= kMergeTol && std::fabs(a.w - b.w) <= kMergeTol * std::max(1.0, a.w)) {
          paired = true;
          break;
        }
      if (!paired)
        throw InvalidDataError("DirectionalMeasure: even flag set but atoms are not antipodally paired");
    }
  }
}

double DirectionalMeasure::mass() const {
  double m = 0.0;
  for (const auto& a : atoms_) m += a.w;
  return m;
}

DirectionalMeasure DirectionalMeasure::reflected() const {
  std::vector<Atom> as = atoms_;
  for (auto& a : as) a.u = -a.u;
  return DirectionalMeasure(dim_, std::move(as), even_);
}

DirectionalMeasure DirectionalMeasure::scaled(double s) const {
  if (!(s > 0)) throw InvalidDataError("DirectionalMeasure::scaled: factor must be positive");
  std::vector<Atom> as = atoms_;
  for (auto& a : as) a.w *= s;
  return DirectionalMeasure(dim_, std::move(as), even_);
}

Barrier Barrier::from_segments(const std::vector<std::array<Vec3, 2>>& segments) {
  Barrier B;
  B.dim = 2;
  for (auto s : segments) {
    s[0].z() = s[1].z() = 0.0;
    Vec3 d = s[1] - s[0];
    double len = d.norm();
    if (len <= kTinyTol) throw InvalidDataError("Barrier: degenerate segment");
    B.pieces.push_back({{s[0], s[1], Vec3::Zero()}, 2, len, rot90(d / len)});
  }
  if (B.pieces.empty()) throw InvalidDataError("Barrier: empty");
  return B;
}

Barrier Barrier::from_triangles(const std::vector<std::array<Vec3, 3>>& triangles) {
  Barrier B;
  B.dim = 3;
  for (const auto& t : triangles) {
    Vec3 cr = (t[1] - t[0]).cross(t[2] - t[0]);
    double area = 0.5 * cr.norm();
    if (area <= kTinyTol) throw InvalidDataError("Barrier: degenerate triangle");
    B.pieces.push_back({{t[0], t[1], t[2]}, 3, area, cr.normalized()});
  }
  if (B.pieces.empty()) throw InvalidDataError("Barrier: empty");
  return B;
}

double Barrier::surface_area() const {
  double s = 0.0;
  for (const auto& p : pieces) s += p.measure;
  return s;
}

Barrier Barrier::translated(const Vec3& t) const {
  Barrier B = *this;
  for (auto& p : B.pieces)
    for (int k = 0; k < p.npts; ++k) p.p[k] += t;
  return B;
}

Barrier Barrier::scaled(double s) const {
  if (!(s > 0)) throw InvalidDataError("Barrier::scaled: factor must be positive");
  Barrier B = *this;
  for (auto& p : B.pieces) {
    for (int k = 0; k < p.npts; ++k) p.p[k] *= s;
    p.measure *= (dim == 2) ? s : s * s;
  }
  return B;
}

Barrier boundary_barrier(const Polytope& P) {
  if (P.lower_dimensional) throw DegenerateError("boundary_barrier: degenerate polytope");
  if (P.dim == 2) {
    std::vector<std::array<Vec3, 2>> segs;
    int n = static_cast<int>(P.vertices.size());
    for (int i = 0; i < n; ++i)
      segs.push_back({P.vertices[i], P.vertices[(i + 1) % n]});
    return Barrier::from_segments(segs);
  }
  const std::vector<std::array<int, 3>>* tris = &P.tris;
  TriMesh mesh;
  const std::vector<Vec3>* pts = &P.vertices;
  if (tris->empty()) {
    mesh = convex_hull_3d(P.vertices);
    pts = &mesh.pts;
    tris = &mesh.tris;
  }
  std::vector<std::array<Vec3, 3>> ts;
  for (const auto& t : *tris) ts.push_back({(*pts)[t[0]], (*pts)[t[1]], (*pts)[t[2]]});
  return Barrier::from_triangles(ts);
}

Barrier refined(const Barrier& B, int parts) {
  if (parts < 1) throw InvalidDataError("refined: parts must be >= 1");
  if (parts == 1) return B;
  Barrier R;
  R.dim = B.dim;
  if (B.dim == 2) {
    std::vector<std::array<Vec3, 2>> segs;
    for (const auto& p : B.pieces)
      for (int k = 0; k < parts; ++k) {
        double t0 = double(k) / parts, t1 = double(k + 1) / parts;
        segs.push_back({p.p[0] + t0 * (p.p[1] - p.p[0]), p.p[0] + t1 * (p.p[1] - p.p[0])});
      }
    return Barrier::from_segments(segs);
  }
  // 3D: repeated 4-way corner/midpoint subdivision.
  std::vector<std::array<Vec3, 3>> tris;
  for (const auto& p : B.pieces) tris.push_back({p.p[0], p.p[1], p.p[2]});
  int rounds = 0;
  while ((1 << (2 * rounds)) < parts) ++rounds;
  for (int r = 0; r < rounds; ++r) {
    std::vector<std::array<Vec3, 3>> next;
    for (const auto& t : tris) {
      Vec3 ab = 0.5 * (t[0] + t[1]), bc = 0.5 * (t[1] + t[2]), ca = 0.5 * (t[2] + t[0]);
      next.push_back({t[0], ab, ca});
      next.push_back({t[1], bc, ab});
      next.push_back({t[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    tris = std::move(next);
  }
  return Barrier::from_triangles(tris);
}

DirectionalMeasure orientation_measure(const Barrier& B) {
  std::vector<Atom> atoms;
  atoms.reserve(B.pieces.size() * 2);
  for (const auto& p : B.pieces) {
    atoms.push_back({p.normal, p.measure});
    atoms.push_back({-p.normal, p.measure});
  }
  return DirectionalMeasure(B.dim, std::move(atoms), true);
}

DirectionalMeasure surface_area_measure(const Polytope& P) {
  if (P.lower_dimensional) throw DegenerateError("surface_area_measure: degenerate polytope");
  std::vector<Atom> atoms;
  atoms.reserve(P.facets.size());
  for (const auto& f : P.facets) atoms.push_back({f.normal, f.area});
  DirectionalMeasure raw(P.dim, atoms, false);
  // Report evenness when it actually holds (symmetric bodies).
  for (const auto& a : raw.atoms()) {
    bool paired = false;
    for (const auto& b : raw.atoms())
      if ((a.u + b.u).norm() <= kMergeTol && std::fabs(a.w - b.w) <= 1e-9 * std::max(1.0, a.w)) {
        paired = true;
        break;
      }
    if (!paired) return raw;
  }
  return DirectionalMeasure(P.dim, atoms, true);
}

MinkowskiDataReport validate_minkowski_data(const DirectionalMeasure& mu) {
  MinkowskiDataReport r;
  double mass = mu.mass();
  Vec3 centroid = Vec3::Zero();
  Mat3 gram = Mat3::Zero();
  for (const auto& a : mu.atoms()) {
    centroid += a.w * a.u;
    gram += a.w * a.u * a.u.transpose();
  }
  r.centroid_residual = centroid.norm() / std::max(mass, kTinyTol);
  r.centroid_ok = centroid.norm() <= 1e-8 * mass;
  int n = mu.dim();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram.topLeftCorner(n, n));
  r.sigma_min = std::sqrt(std::max(0.0, es.eigenvalues().minCoeff()));
  r.spans = r.sigma_min > 1e-8;
  r.pass = r.centroid_ok && r.spans;
  if (!r.centroid_ok)
    r.violation = "weighted directions do not sum to the origin";
  else if (!r.spans)
    r.violation = "measure concentrated on a great subsphere";
  return r;
}

DirectionalMeasure blaschke_measure(const Polytope& P) {
  DirectionalMeasure s = surface_area_measure(P);
  std::vector<Atom> atoms;
  atoms.reserve(s.atoms().size() * 2);
  for (const auto& a : s.atoms()) {
    atoms.push_back({a.u, 0.5 * a.w});
    atoms.push_back({-a.u, 0.5 * a.w});
  }
  return DirectionalMeasure(P.dim, std::move(atoms), true);
}

double projection_function(const DirectionalMeasure& mu, const Vec3& u) {
  double s = 0.0;
  for (const auto& a : mu.atoms()) s += a.w * std::fabs(u.dot(a.u));
  return 0.5 * s;
}

Polytope projection_body_any(const DirectionalMeasure& mu) {
  std::vector<Vec3> gens;
  gens.reserve(mu.atoms().size());
  for (const auto& a : mu.atoms()) gens.push_back(a.w * a.u);
  return zonotope(std::move(gens), mu.dim());
}

Polytope projection_body(const DirectionalMeasure& mu) {
  if (!mu.even()) throw InvalidDataError("projection_body: measure must be even");
  auto report = validate_minkowski_data(mu);
  if (!report.pass) throw DegenerateError("projection_body: " + report.violation);
  return projection_body_any(mu);
}

std::pair<double, double> mean_width_projection_identity(const DirectionalMeasure& mu) {
  Polytope Pi = projection_body_any(mu);
  int n = mu.dim();
  double rhs = 2.0 * unit_ball_volume(n - 1) / sphere_surface(n) * mu.mass();
  return {mean_width(Pi), rhs};
}

}  // namespace opaque
