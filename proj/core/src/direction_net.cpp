#include "opaque/direction_net.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "opaque/rng.hpp"

namespace opaque {

TriMesh icosphere_mesh(int level) {
  if (level < 0 || level > 9) throw InvalidDataError("icosphere_mesh: level out of range");
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> pts = {
      {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
  for (auto& p : pts) p.normalize();
  std::vector<std::array<int, 3>> tris = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  for (int l = 0; l < level; ++l) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      Vec3 m = (pts[a] + pts[b]).normalized();
      int idx = static_cast<int>(pts.size());
      pts.push_back(m);
      midpoint[key] = idx;
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(tris.size() * 4);
    for (const auto& t : tris) {
      int ab = mid(t[0], t[1]), bc = mid(t[1], t[2]), ca = mid(t[2], t[0]);
      next.push_back({t[0], ab, ca});
      next.push_back({t[1], bc, ab});
      next.push_back({t[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    tris = std::move(next);
  }

  TriMesh mesh;
  mesh.pts = std::move(pts);
  mesh.tris.reserve(tris.size());
  for (auto t : tris) {
    Vec3 n = (mesh.pts[t[1]] - mesh.pts[t[0]]).cross(mesh.pts[t[2]] - mesh.pts[t[0]]);
    if (n.dot(mesh.pts[t[0]] + mesh.pts[t[1]] + mesh.pts[t[2]]) < 0) std::swap(t[1], t[2]);
    mesh.tris.push_back(t);
  }
  return mesh;
}

SphereNet sphere_net(int dim, int level) {
  SphereNet net;
  net.dim = dim;
  net.level = level;
  if (dim == 2) {
    int n = 1 << (level + 6);
    net.points.reserve(n);
    for (int k = 0; k < n; ++k) {
      double a = 2.0 * std::numbers::pi * k / n;
      net.points.emplace_back(std::cos(a), std::sin(a), 0.0);
    }
    net.covering_radius = 2.0 * std::sin(std::numbers::pi / (2.0 * n));
    return net;
  }
  if (dim != 3) throw InvalidDataError("sphere_net: dim must be 2 or 3");
  TriMesh mesh = icosphere_mesh(level);
  double cover = 0.0;
  for (const auto& t : mesh.tris) {
    const Vec3 &a = mesh.pts[t[0]], &b = mesh.pts[t[1]], &c = mesh.pts[t[2]];
    // Point on the sphere equidistant from a, b, c; covers the face.
    Vec3 cc = (b - a).cross(c - a);
    if (cc.dot(a + b + c) < 0) cc = -cc;
    cc.normalize();
    cover = std::max({cover, (cc - a).norm(), (cc - b).norm(), (cc - c).norm()});
  }
  net.points = std::move(mesh.pts);
  net.covering_radius = cover;
  return net;
}

Polytope icosphere_polytope(int level, double radius) {
  if (radius <= 0) throw InvalidDataError("icosphere_polytope: radius must be positive");
  TriMesh mesh = icosphere_mesh(level);
  for (auto& p : mesh.pts) p *= radius;
  return Polytope::from_mesh(std::move(mesh));
}

std::vector<Vec3> random_directions(int dim, int count, std::uint64_t seed) {
  std::vector<Vec3> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(substream(seed, i).sphere_direction(dim));
  return out;
}

}  // namespace opaque
