#include "opaque/scenarios.hpp"

#include <cmath>
#include <numbers>

namespace opaque {

Polytope centered_unit_square() {
  return Polytope::from_vertices(
      2, {{-0.5, -0.5, 0}, {0.5, -0.5, 0}, {0.5, 0.5, 0}, {-0.5, 0.5, 0}});
}

Polytope centered_cube(double side) {
  double h = side / 2.0;
  std::vector<Vec3> v;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) v.emplace_back(sx * h, sy * h, sz * h);
  return Polytope::from_vertices(3, v);
}

Barrier fig1_steiner_barrier() {
  const Vec3 s(0.2113, 0.2113, 0.0);
  const Vec3 shift(0.5, 0.5, 0.0);
  std::vector<std::array<Vec3, 2>> segs = {
      {Vec3(0, 1, 0) - shift, s - shift},
      {Vec3(0, 0, 0) - shift, s - shift},
      {Vec3(1, 0, 0) - shift, s - shift},
      {Vec3(1, 1, 0) - shift, Vec3(0.5, 0.5, 0) - shift},
  };
  return Barrier::from_segments(segs);
}

Barrier half_boundary_barrier(const Polytope& P) {
  return boundary_barrier(scaled(P, 0.5));
}

Polytope cylinder_polytope(double s, int cross_section_sides) {
  if (!(s > 0)) throw InvalidDataError("cylinder_polytope: length must be positive");
  if (cross_section_sides < 3 || cross_section_sides % 2 != 0)
    throw InvalidDataError("cylinder_polytope: need an even m >= 4 for a symmetric body");
  double r = 1.0 / (2.0 * s);
  std::vector<Vec3> pts;
  pts.reserve(2 * cross_section_sides);
  for (int k = 0; k < cross_section_sides; ++k) {
    double a = 2.0 * std::numbers::pi * k / cross_section_sides;
    for (double x : {-s / 2.0, s / 2.0})
      pts.emplace_back(x, r * std::cos(a), r * std::sin(a));
  }
  return Polytope::from_vertices(3, pts);
}

}  // namespace opaque
