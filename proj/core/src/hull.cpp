#include "opaque/hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace opaque {

namespace {

double cross2(const Vec3& o, const Vec3& a, const Vec3& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

double point_scale(const std::vector<Vec3>& pts) {
  double s = 1.0;
  for (const auto& p : pts) s = std::max(s, p.lpNorm<Eigen::Infinity>());
  return s;
}

std::vector<Vec3> dedupe(std::vector<Vec3> pts, double tol) {
  std::vector<Vec3> out;
  for (const auto& p : pts) {
    bool seen = false;
    for (const auto& q : out)
      if ((p - q).norm() <= tol) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(p);
  }
  return out;
}

}  // namespace

int affine_rank(const std::vector<Vec3>& pts, double tol) {
  if (pts.empty()) return -1;
  Eigen::MatrixXd M(static_cast<int>(pts.size()), 3);
  Vec3 mean = Vec3::Zero();
  for (const auto& p : pts) mean += p;
  mean /= static_cast<double>(pts.size());
  for (int i = 0; i < M.rows(); ++i) M.row(i) = (pts[i] - mean).transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  int rank = 0;
  double scale = std::max(1.0, svd.singularValues().size() ? svd.singularValues()(0) : 0.0);
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol * scale) ++rank;
  return rank;
}

std::vector<Vec3> convex_hull_2d(std::vector<Vec3> pts) {
  double scale = point_scale(pts);
  double tol = 1e-12 * scale * scale;
  pts = dedupe(std::move(pts), 1e-12 * scale);
  if (pts.size() < 3) throw DegenerateError("convex_hull_2d: fewer than 3 distinct points");
  std::sort(pts.begin(), pts.end(), [](const Vec3& a, const Vec3& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  int n = static_cast<int>(pts.size());
  std::vector<Vec3> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= tol) --k;
    h[k++] = pts[i];
  }
  for (int i = n - 2, lower = k + 1; i >= 0; --i) {
    while (k >= lower && cross2(h[k - 2], h[k - 1], pts[i]) <= tol) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) throw DegenerateError("convex_hull_2d: points are collinear");
  return h;
}

TriMesh convex_hull_3d(std::vector<Vec3> pts) {
  double scale = point_scale(pts);
  pts = dedupe(std::move(pts), 1e-11 * scale);
  int n = static_cast<int>(pts.size());
  if (n < 4) throw DegenerateError("convex_hull_3d: fewer than 4 distinct points");

  // Initial tetrahedron with maximal spread.
  int i0 = 0, i1 = -1;
  double best = -1;
  for (int i = 1; i < n; ++i) {
    double d = (pts[i] - pts[i0]).norm();
    if (d > best) best = d, i1 = i;
  }
  int i2 = -1;
  best = -1;
  for (int i = 0; i < n; ++i) {
    double d = (pts[i] - pts[i0]).cross(pts[i] - pts[i1]).norm();
    if (d > best) best = d, i2 = i;
  }
  if (best < 1e-11 * scale * scale)
    throw DegenerateError("convex_hull_3d: points are collinear");
  Vec3 nrm = (pts[i1] - pts[i0]).cross(pts[i2] - pts[i0]);
  int i3 = -1;
  best = -1;
  for (int i = 0; i < n; ++i) {
    double d = std::fabs(nrm.dot(pts[i] - pts[i0]));
    if (d > best) best = d, i3 = i;
  }
  if (best < 1e-10 * scale * scale * scale / std::max(scale, 1.0))
    throw DegenerateError("convex_hull_3d: points are coplanar");

  struct Face {
    std::array<int, 3> v;
    Vec3 n;  // not normalized
    double off;
    bool alive = true;
  };
  std::vector<Face> faces;
  auto make_face = [&](int a, int b, int c, const Vec3& inside) {
    Face f;
    f.v = {a, b, c};
    f.n = (pts[b] - pts[a]).cross(pts[c] - pts[a]);
    if (f.n.dot(inside - pts[a]) > 0) {
      std::swap(f.v[1], f.v[2]);
      f.n = -f.n;
    }
    f.off = f.n.dot(pts[f.v[0]]);
    return f;
  };
  Vec3 centroid = (pts[i0] + pts[i1] + pts[i2] + pts[i3]) / 4.0;
  faces.push_back(make_face(i0, i1, i2, centroid));
  faces.push_back(make_face(i0, i1, i3, centroid));
  faces.push_back(make_face(i0, i2, i3, centroid));
  faces.push_back(make_face(i1, i2, i3, centroid));

  double eps = 1e-10 * scale;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;

  for (int p : order) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    // Visible faces; signed distance normalized by face normal length.
    std::vector<int> visible;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
      if (!faces[f].alive) continue;
      double d = (faces[f].n.dot(pts[p]) - faces[f].off) / faces[f].n.norm();
      if (d > eps) visible.push_back(f);
    }
    if (visible.empty()) continue;
    // Horizon: directed edges of visible faces whose reverse is not visible.
    std::set<std::pair<int, int>> vis_edges;
    for (int f : visible)
      for (int e = 0; e < 3; ++e)
        vis_edges.insert({faces[f].v[e], faces[f].v[(e + 1) % 3]});
    std::vector<std::pair<int, int>> horizon;
    for (const auto& e : vis_edges)
      if (!vis_edges.count({e.second, e.first})) horizon.push_back(e);
    for (int f : visible) faces[f].alive = false;
    for (const auto& e : horizon)
      faces.push_back(make_face(e.first, e.second, p, centroid));
  }

  // Compact: keep referenced points, reindex.
  std::vector<int> remap(n, -1);
  TriMesh mesh;
  for (const auto& f : faces) {
    if (!f.alive) continue;
    std::array<int, 3> t;
    for (int e = 0; e < 3; ++e) {
      int v = f.v[e];
      if (remap[v] < 0) {
        remap[v] = static_cast<int>(mesh.pts.size());
        mesh.pts.push_back(pts[v]);
      }
      t[e] = remap[v];
    }
    mesh.tris.push_back(t);
  }
  return mesh;
}

}  // namespace opaque
