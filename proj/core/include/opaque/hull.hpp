#pragma once

#include <array>
#include <vector>

#include "opaque/common.hpp"

namespace opaque {

// Convex hull of planar points (z ignored), returned in counter-clockwise
// order without collinear or duplicate points. Throws DegenerateError if the
// points span less than 2 dimensions.
std::vector<Vec3> convex_hull_2d(std::vector<Vec3> pts);

struct TriMesh {
  std::vector<Vec3> pts;
  std::vector<std::array<int, 3>> tris;  // outward-oriented
};

// Incremental convex hull in 3D. Coplanar input points are kept on the hull
// (faces get fan-triangulated). Throws DegenerateError if the points span
// less than 3 dimensions.
TriMesh convex_hull_3d(std::vector<Vec3> pts);

// Affine rank of a point set (0 = point, 1 = segment, ...).
int affine_rank(const std::vector<Vec3>& pts, double tol = 1e-9);

}  // namespace opaque
