#pragma once

#include <cstdint>
#include <vector>

#include "opaque/geometry.hpp"

namespace opaque {

// Finite direction set with a certified covering radius: every unit vector is
// within covering_radius (Euclidean) of some net point.
struct SphereNet {
  int dim = 3;
  int level = 0;
  std::vector<Vec3> points;
  double covering_radius = 0.0;
};

// Subdivided-icosahedron mesh on the unit sphere; level l has 20*4^l faces.
TriMesh icosphere_mesh(int level);

// 2D: 2^(level+6) equally spaced angles. 3D: icosphere vertices with the
// covering radius taken from the spherical face circumradii.
SphereNet sphere_net(int dim, int level);

Polytope icosphere_polytope(int level, double radius = 1.0);

std::vector<Vec3> random_directions(int dim, int count, std::uint64_t seed);

}  // namespace opaque
