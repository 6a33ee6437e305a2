#include "opaque/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "opaque/lp.hpp"
#include "opaque/rng.hpp"

namespace opaque {

namespace {

double point_scale(const std::vector<Vec3>& pts) {
  double s = 1.0;
  for (const auto& p : pts) s = std::max(s, p.lpNorm<Eigen::Infinity>());
  return s;
}

bool lex_less(const Vec3& a, const Vec3& b) {
  if (a.x() != b.x()) return a.x() < b.x();
  if (a.y() != b.y()) return a.y() < b.y();
  return a.z() < b.z();
}

// Facets of a CCW polygon: one edge each, outward normal to the right of the
// edge direction.
std::vector<Facet> polygon_facets(const std::vector<Vec3>& ccw) {
  std::vector<Facet> fs;
  int n = static_cast<int>(ccw.size());
  fs.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Vec3& a = ccw[i];
    const Vec3& b = ccw[(i + 1) % n];
    Vec3 e = b - a;
    double len = e.norm();
    if (len < kTinyTol) continue;
    Vec3 nrm(e.y() / len, -e.x() / len, 0.0);
    fs.push_back({nrm, nrm.dot(a), len});
  }
  return fs;
}

Polytope polygon_from_ccw(std::vector<Vec3> ccw) {
  // Canonical start: rotate the cycle to the lexicographically smallest vertex.
  std::size_t lo = 0;
  for (std::size_t i = 1; i < ccw.size(); ++i)
    if (lex_less(ccw[i], ccw[lo])) lo = i;
  std::rotate(ccw.begin(), ccw.begin() + lo, ccw.end());
  Polytope P;
  P.dim = 2;
  P.facets = polygon_facets(ccw);
  P.vertices = std::move(ccw);
  return P;
}

Polytope polytope3_from_mesh(TriMesh mesh) {
  Polytope P;
  P.dim = 3;
  double scale = point_scale(mesh.pts);
  // Merge coplanar triangles into facets.
  struct Group {
    Vec3 n_sum = Vec3::Zero();  // area-weighted
    double area = 0.0;
    Vec3 n_ref;
    double off_ref;
  };
  std::vector<Group> groups;
  for (const auto& t : mesh.tris) {
    const Vec3 &a = mesh.pts[t[0]], &b = mesh.pts[t[1]], &c = mesh.pts[t[2]];
    Vec3 cr = (b - a).cross(c - a);
    double area2 = cr.norm();
    if (area2 < kTinyTol * scale * scale) continue;
    Vec3 n = cr / area2;
    double off = n.dot(a);
    bool merged = false;
    for (auto& g : groups) {
      if ((g.n_ref - n).norm() < 1e-7 && std::fabs(g.off_ref - off) < 1e-8 * std::max(1.0, scale)) {
        g.n_sum += 0.5 * area2 * n;
        g.area += 0.5 * area2;
        merged = true;
        break;
      }
    }
    if (!merged) groups.push_back({0.5 * area2 * n, 0.5 * area2, n, off});
  }
  for (const auto& g : groups) {
    Vec3 n = g.n_sum.normalized();
    double h = -std::numeric_limits<double>::infinity();
    for (const auto& p : mesh.pts) h = std::max(h, n.dot(p));
    P.facets.push_back({n, h, g.area});
  }
  // Canonical vertex order (and triangle remap) for stable serialization.
  std::vector<int> order(mesh.pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(mesh.pts[a], mesh.pts[b]); });
  std::vector<int> inv(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) inv[order[i]] = static_cast<int>(i);
  P.vertices.reserve(mesh.pts.size());
  for (int idx : order) P.vertices.push_back(mesh.pts[idx]);
  P.tris.reserve(mesh.tris.size());
  for (const auto& t : mesh.tris) P.tris.push_back({inv[t[0]], inv[t[1]], inv[t[2]]});
  return P;
}

}  // namespace

Polytope Polytope::from_mesh(TriMesh mesh) { return polytope3_from_mesh(std::move(mesh)); }

Polytope Polytope::from_vertices(int dim, std::vector<Vec3> pts) {
  if (dim != 2 && dim != 3) throw InvalidDataError("Polytope: dim must be 2 or 3");
  if (pts.empty()) throw InvalidDataError("Polytope: no vertices");
  if (dim == 2)
    for (auto& p : pts) p.z() = 0.0;
  int rank = affine_rank(pts);
  if (rank > dim) throw InvalidDataError("Polytope: vertices exceed the declared dimension");

  if (rank == dim) {
    if (dim == 2) return polygon_from_ccw(convex_hull_2d(std::move(pts)));
    return polytope3_from_mesh(convex_hull_3d(std::move(pts)));
  }

  // Lower-dimensional body: keep an extreme-point representation, no facets.
  Polytope P;
  P.dim = dim;
  P.lower_dimensional = true;
  if (rank <= 0) {
    P.vertices = {pts.front()};
  } else if (rank == 1) {
    Vec3 d = Vec3::Zero();
    for (const auto& p : pts) {
      d = p - pts.front();
      if (d.norm() > kTinyTol) break;
    }
    d.normalize();
    auto lo = pts.front(), hi = pts.front();
    double tlo = 0, thi = 0;
    for (const auto& p : pts) {
      double t = d.dot(p - pts.front());
      if (t < tlo) tlo = t, lo = p;
      if (t > thi) thi = t, hi = p;
    }
    P.vertices = {lo, hi};
  } else {
    // rank 2 in R^3: planar polygon. Store its planar hull.
    Vec3 mean = Vec3::Zero();
    for (const auto& p : pts) mean += p;
    mean /= static_cast<double>(pts.size());
    Eigen::MatrixXd M(static_cast<int>(pts.size()), 3);
    for (int i = 0; i < M.rows(); ++i) M.row(i) = (pts[i] - mean).transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
    Vec3 e1 = svd.matrixV().col(0), e2 = svd.matrixV().col(1);
    std::vector<Vec3> plane;
    plane.reserve(pts.size());
    for (const auto& p : pts)
      plane.emplace_back(e1.dot(p - mean), e2.dot(p - mean), 0.0);
    auto hull = convex_hull_2d(plane);
    for (const auto& q : hull) P.vertices.push_back(mean + q.x() * e1 + q.y() * e2);
  }
  return P;
}

bool Polytope::valid(std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (vertices.empty()) return fail("no vertices");
  if (lower_dimensional) return true;
  if (facets.empty()) return fail("full-dimensional polytope without facets");
  double total = 0;
  Vec3 closure = Vec3::Zero();
  for (const auto& f : facets) {
    total += f.area;
    closure += f.area * f.normal;
    int tight = 0;
    for (const auto& v : vertices) {
      double s = f.normal.dot(v) - f.offset;
      if (s > kIncidenceTol) return fail("vertex outside facet halfspace");
      if (std::fabs(s) <= kIncidenceTol) ++tight;
    }
    if (tight < dim) return fail("facet with fewer than dim incident vertices");
  }
  if (closure.norm() > kIncidenceTol * std::max(1.0, total))
    return fail("facet closure sum not zero");
  if (volume(*this) <= 0) return fail("non-positive volume");
  return true;
}

double support(const Polytope& P, const Vec3& direction) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : P.vertices) best = std::max(best, direction.dot(v));
  return best;
}

double support(const Polytope& P, const Direction& u) { return support(P, u.vec()); }

Polytope translated(const Polytope& P, const Vec3& t) {
  Polytope Q = P;
  for (auto& v : Q.vertices) v += t;
  for (auto& f : Q.facets) f.offset += f.normal.dot(t);
  return Q;
}

Polytope scaled(const Polytope& P, double s) {
  if (s <= 0) throw InvalidDataError("scaled: factor must be positive");
  Polytope Q = P;
  for (auto& v : Q.vertices) v *= s;
  for (auto& f : Q.facets) {
    f.offset *= s;
    f.area *= (P.dim == 2) ? s : s * s;
  }
  return Q;
}

Polytope reflected(const Polytope& P) {
  Polytope Q = P;
  for (auto& v : Q.vertices) v = -v;
  for (auto& f : Q.facets) f.normal = -f.normal;
  for (auto& t : Q.tris) std::swap(t[1], t[2]);
  return Q;
}

bool contains_point(const Polytope& P, const Vec3& x, double tol) {
  if (P.lower_dimensional) throw DegenerateError("contains_point: degenerate polytope");
  for (const auto& f : P.facets)
    if (f.normal.dot(x) > f.offset + tol) return false;
  return true;
}

namespace {

struct EdgeCycle {
  Vec3 start = Vec3::Zero();
  std::vector<Vec3> edges;  // CCW from the bottom-most (then left-most) vertex
};

bool below(const Vec3& a, const Vec3& b) {
  return a.y() < b.y() || (a.y() == b.y() && a.x() < b.x());
}

EdgeCycle edge_cycle(const Polytope& P) {
  EdgeCycle c;
  if (P.vertices.size() == 1) {
    c.start = P.vertices[0];
    return c;
  }
  if (P.lower_dimensional) {
    // Segment: two edges, from the lower endpoint.
    Vec3 a = P.vertices[0], b = P.vertices[1];
    if (below(b, a)) std::swap(a, b);
    c.start = a;
    c.edges = {b - a, a - b};
    return c;
  }
  int n = static_cast<int>(P.vertices.size());
  int lo = 0;
  for (int i = 1; i < n; ++i)
    if (below(P.vertices[i], P.vertices[lo])) lo = i;
  c.start = P.vertices[lo];
  for (int k = 0; k < n; ++k) {
    const Vec3& a = P.vertices[(lo + k) % n];
    const Vec3& b = P.vertices[(lo + k + 1) % n];
    c.edges.push_back(b - a);
  }
  return c;
}

double edge_angle(const Vec3& e) {
  double a = std::atan2(e.y(), e.x());
  if (a < 0) a += 2.0 * std::numbers::pi;
  return a;
}

}  // namespace

Polytope minkowski_sum_2d(const Polytope& P, const Polytope& Q) {
  if (P.dim != 2 || Q.dim != 2) throw InvalidDataError("minkowski_sum_2d: dim must be 2");
  EdgeCycle cp = edge_cycle(P), cq = edge_cycle(Q);
  std::vector<Vec3> verts;
  verts.push_back(cp.start + cq.start);
  std::size_t i = 0, j = 0;
  while (i < cp.edges.size() || j < cq.edges.size()) {
    Vec3 step;
    if (i == cp.edges.size()) {
      step = cq.edges[j++];
    } else if (j == cq.edges.size()) {
      step = cp.edges[i++];
    } else {
      double ai = edge_angle(cp.edges[i]), aj = edge_angle(cq.edges[j]);
      if (std::fabs(ai - aj) < 1e-12) {
        step = cp.edges[i++] + cq.edges[j++];
      } else if (ai < aj) {
        step = cp.edges[i++];
      } else {
        step = cq.edges[j++];
      }
    }
    verts.push_back(verts.back() + step);
  }
  verts.pop_back();  // closes back at the start
  return Polytope::from_vertices(2, std::move(verts));
}

namespace {

// Flip generators into a canonical half-space and merge parallel ones.
std::vector<Vec3> canonical_generators(std::vector<Vec3> gens, int dim) {
  std::vector<Vec3> out;
  for (auto g : gens) {
    if (dim == 2) g.z() = 0.0;
    if (g.norm() < kTinyTol) continue;
    Vec3 d = g.normalized();
    bool flip = d.z() < 0 || (d.z() == 0 && (d.y() < 0 || (d.y() == 0 && d.x() < 0)));
    if (flip) g = -g;
    bool merged = false;
    for (auto& h : out) {
      if (h.normalized().cross(g.normalized()).norm() < 1e-12 &&
          h.normalized().dot(g.normalized()) > 0) {
        h += g;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(g);
  }
  return out;
}

Polytope zonogon(const std::vector<Vec3>& gens) {
  std::vector<std::pair<double, Vec3>> reps;
  for (const auto& g : gens) reps.emplace_back(std::atan2(g.y(), g.x()), g);
  // canonical_generators flipped everything into angle [0, pi)
  std::sort(reps.begin(), reps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (reps.size() < 2) throw DegenerateError("zonotope: generators span < 2 dimensions");
  Vec3 half = Vec3::Zero();
  for (const auto& [a, g] : reps) half += g;
  half *= 0.5;
  std::vector<Vec3> verts;
  Vec3 cur = -half;
  for (const auto& [a, g] : reps) {
    verts.push_back(cur);
    cur += g;
  }
  std::size_t m = verts.size();
  for (std::size_t k = 0; k < m; ++k) verts.push_back(-verts[k]);
  return polygon_from_ccw(std::move(verts));
}

Polytope zonotope3(const std::vector<Vec3>& gens) {
  int m = static_cast<int>(gens.size());
  // Facet directions from generator pairs.
  std::vector<Vec3> dirs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Vec3 c = gens[i].cross(gens[j]);
      if (c.norm() < 1e-12 * gens[i].norm() * gens[j].norm()) continue;
      c.normalize();
      bool seen = false;
      for (const auto& d : dirs)
        if ((d - c).norm() < kMergeTol || (d + c).norm() < kMergeTol) {
          seen = true;
          break;
        }
      if (!seen) dirs.push_back(c);
    }
  if (dirs.empty()) throw DegenerateError("zonotope: generators span < 3 dimensions");
  {
    // Rank check: some pair direction must not absorb all generators.
    bool full = false;
    for (const auto& d : dirs)
      for (const auto& g : gens)
        if (std::fabs(d.dot(g)) > 1e-9 * g.norm()) {
          full = true;
          break;
        }
    if (!full) throw DegenerateError("zonotope: generators span < 3 dimensions");
  }

  Polytope P;
  P.dim = 3;
  for (const auto& d : dirs) {
    double h = 0.0;
    std::vector<Vec3> inplane;
    for (const auto& g : gens) {
      double t = d.dot(g);
      if (std::fabs(t) <= 1e-9 * g.norm())
        inplane.push_back(g);
      else
        h += std::fabs(t);
    }
    h *= 0.5;
    Vec3 e1 = unit(inplane.front());
    Vec3 e2 = d.cross(e1);
    double area = 0.0;
    for (std::size_t a = 0; a < inplane.size(); ++a)
      for (std::size_t b = a + 1; b < inplane.size(); ++b) {
        double ax = e1.dot(inplane[a]), ay = e2.dot(inplane[a]);
        double bx = e1.dot(inplane[b]), by = e2.dot(inplane[b]);
        area += std::fabs(ax * by - ay * bx);
      }
    if (area < kTinyTol) continue;
    P.facets.push_back({d, h, area});
    P.facets.push_back({-d, h, area});
  }

  // Vertices from sign patterns over perturbed pair directions plus a random
  // sweep; complete for generic generators.
  auto vertex_of = [&](const Vec3& w) {
    Vec3 v = Vec3::Zero();
    for (const auto& g : gens) v += (w.dot(g) >= 0 ? 1.0 : -1.0) * g;
    return Vec3(0.5 * v);
  };
  std::vector<Vec3> cand;
  const double eps = 1e-7;
  for (const auto& d : dirs) {
    Vec3 t1 = d.cross(Vec3(std::fabs(d.x()) < 0.9 ? 1.0 : 0.0,
                           std::fabs(d.x()) < 0.9 ? 0.0 : 1.0, 0.0))
                  .normalized();
    Vec3 t2 = d.cross(t1);
    const Vec3 offs[8] = {t1,  -t1, t2,  -t2, (t1 + t2).normalized(), (t1 - t2).normalized(),
                          (-t1 + t2).normalized(), (-t1 - t2).normalized()};
    for (const auto& o : offs) {
      cand.push_back(vertex_of((d + eps * o).normalized()));
      cand.push_back(vertex_of((-d + eps * o).normalized()));
    }
  }
  SplitMix64 rng(0x5eedULL);
  for (int k = 0; k < 1000; ++k) cand.push_back(vertex_of(rng.sphere_direction(3)));

  // Merge duplicates, then keep only true vertices (>= 3 tight facets).
  std::vector<Vec3> merged;
  for (const auto& v : cand) {
    bool seen = false;
    for (const auto& u : merged)
      if ((u - v).norm() <= kMergeTol) {
        seen = true;
        break;
      }
    if (!seen) merged.push_back(v);
  }
  for (const auto& v : merged) {
    int tight = 0;
    for (const auto& f : P.facets)
      if (std::fabs(f.normal.dot(v) - f.offset) <= kIncidenceTol) ++tight;
    if (tight >= 3) P.vertices.push_back(v);
  }
  if (P.vertices.size() < 4) throw DegenerateError("zonotope: vertex enumeration failed");
  return P;
}

}  // namespace

Polytope zonotope(std::vector<Vec3> generators, int dim) {
  if (dim != 2 && dim != 3) throw InvalidDataError("zonotope: dim must be 2 or 3");
  auto gens = canonical_generators(std::move(generators), dim);
  if (gens.empty()) throw DegenerateError("zonotope: no usable generators");
  if (dim == 2) return zonogon(gens);
  return zonotope3(gens);
}

double volume(const Polytope& P) {
  if (P.lower_dimensional) throw DegenerateError("volume: degenerate polytope");
  if (P.dim == 2) {
    double a = 0.0;
    int n = static_cast<int>(P.vertices.size());
    for (int i = 0; i < n; ++i) {
      const Vec3& p = P.vertices[i];
      const Vec3& q = P.vertices[(i + 1) % n];
      a += p.x() * q.y() - q.x() * p.y();
    }
    return 0.5 * a;
  }
  double v = 0.0;
  for (const auto& f : P.facets) v += f.offset * f.area;
  return v / 3.0;
}

double surface_area(const Polytope& P) {
  if (P.lower_dimensional) throw DegenerateError("surface_area: degenerate polytope");
  double s = 0.0;
  for (const auto& f : P.facets) s += f.area;
  return s;
}

double mean_width(const Polytope& P) {
  if (P.lower_dimensional) {
    if (P.vertices.size() == 1) return 0.0;
    if (P.vertices.size() == 2) {
      double len = (P.vertices[1] - P.vertices[0]).norm();
      return 2.0 * unit_ball_volume(P.dim - 1) / sphere_surface(P.dim) * len;
    }
    throw DegenerateError("mean_width: unsupported degenerate body");
  }
  if (P.dim == 2) return surface_area(P) / std::numbers::pi;

  const std::vector<std::array<int, 3>>* tris = &P.tris;
  TriMesh mesh;
  std::vector<std::array<int, 3>> local;
  const std::vector<Vec3>* pts = &P.vertices;
  if (tris->empty()) {
    mesh = convex_hull_3d(P.vertices);
    pts = &mesh.pts;
    local = mesh.tris;
    tris = &local;
  }
  std::map<std::pair<int, int>, std::vector<int>> edges;
  for (int t = 0; t < static_cast<int>(tris->size()); ++t)
    for (int e = 0; e < 3; ++e) {
      int a = (*tris)[t][e], b = (*tris)[t][(e + 1) % 3];
      edges[{std::min(a, b), std::max(a, b)}].push_back(t);
    }
  auto tri_normal = [&](int t) {
    const auto& tr = (*tris)[t];
    return Vec3(((*pts)[tr[1]] - (*pts)[tr[0]])
                    .cross((*pts)[tr[2]] - (*pts)[tr[0]])
                    .normalized());
  };
  double sum = 0.0;
  for (const auto& [e, ts] : edges) {
    if (ts.size() != 2) throw DegenerateError("mean_width: boundary triangulation not closed");
    double theta = angle_between(tri_normal(ts[0]), tri_normal(ts[1]));
    if (theta < 1e-7) continue;  // coplanar neighbours
    sum += ((*pts)[e.second] - (*pts)[e.first]).norm() * theta;
  }
  return sum / (4.0 * std::numbers::pi);
}

InballResult inball(const Polytope& P) {
  if (P.lower_dimensional) throw DegenerateError("inball: degenerate polytope");
  int n = P.dim;
  int m = static_cast<int>(P.facets.size());
  std::vector<std::vector<double>> A(m, std::vector<double>(2 * n + 1, 0.0));
  std::vector<double> b(m), c(2 * n + 1, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < n; ++k) {
      A[i][k] = P.facets[i].normal[k];
      A[i][n + k] = -P.facets[i].normal[k];
    }
    A[i][2 * n] = 1.0;
    b[i] = P.facets[i].offset;
  }
  c[2 * n] = 1.0;
  auto res = SimplexSolver::maximize(A, b, c);
  if (res.status != SimplexSolver::Status::Optimal)
    throw DegenerateError("inball: LP infeasible or unbounded (invalid polytope)");
  Vec3 center = Vec3::Zero();
  for (int k = 0; k < n; ++k) center[k] = res.x[k] - res.x[n + k];
  return {res.value, center};
}

double inradius(const Polytope& P) { return inball(P).radius; }

double circumradius(const Polytope& P) {
  Vec3 c = inball(P).center;
  double r = 0.0;
  for (const auto& v : P.vertices) r = std::max(r, (v - c).norm());
  return r;
}

double enclosing_radius_from_width(int n, double mean_width) {
  return sphere_surface(n) / (2.0 * unit_ball_volume(n - 1)) * mean_width;
}

double enclosing_radius_from_inball(int n, double r, double surface_area) {
  return std::pow(2.0, n - 1) / unit_ball_volume(n - 2) *
         std::pow(r, -(n - 2)) * surface_area;
}

BallSandwich balls_from_projection_sandwich(int n, double r, double R) {
  double R0 = sphere_surface(n) / r *
              std::pow(R / unit_ball_volume(n - 1), double(n) / (n - 1));
  double r0 = r / (std::pow(2.0, n - 1) * std::pow(R0, n - 2));
  return {r0, R0};
}

}  // namespace opaque
