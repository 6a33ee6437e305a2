#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "opaque/common.hpp"
#include "opaque/hull.hpp"

namespace opaque {

struct Facet {
  Vec3 normal;    // outer unit normal
  double offset;  // support value h = <x, normal> on the facet
  double area;    // edge length (2D) or facet area (3D)
};

// Convex body as vertex list plus facet data. Full-dimensional polytopes in
// R^2 keep their vertices in counter-clockwise order. Lower-dimensional
// bodies (segments, planar polygons in 3D) are representable but flagged;
// only support and mean_width are defined on them.
struct Polytope {
  int dim = 2;
  bool lower_dimensional = false;
  std::vector<Vec3> vertices;
  std::vector<Facet> facets;
  std::vector<std::array<int, 3>> tris;  // 3D boundary triangulation (optional cache)

  static Polytope from_vertices(int dim, std::vector<Vec3> pts);

  // Builds a 3D polytope directly from a closed outward-oriented triangle
  // mesh; coplanar triangles are merged into facets.
  static Polytope from_mesh(TriMesh mesh);

  // Checks the representation invariants; returns false and a reason if any
  // fails. Vertex/facet incidence is tested at kIncidenceTol.
  bool valid(std::string* why = nullptr) const;
};

struct Ball {
  Vec3 center = Vec3::Zero();
  double radius = 1.0;
};

double support(const Polytope& P, const Vec3& direction);
double support(const Polytope& P, const Direction& u);

Polytope translated(const Polytope& P, const Vec3& t);
Polytope scaled(const Polytope& P, double s);   // s > 0, about the origin
Polytope reflected(const Polytope& P);          // x -> -x

// True if x satisfies every facet inequality within tol.
bool contains_point(const Polytope& P, const Vec3& x, double tol = kIncidenceTol);

// Vertex representation of P + Q via the classical edge-vector merge.
// Accepts degenerate summands (points, segments).
Polytope minkowski_sum_2d(const Polytope& P, const Polytope& Q);

// Origin-symmetric zonotope (1/2) sum_j [-g_j, g_j], so that
// support(Z, u) = (1/2) sum_j |<u, g_j>|. Generators with norm below 1e-12
// are dropped; parallel generators are merged. Throws DegenerateError if the
// generators span fewer than dim dimensions.
Polytope zonotope(std::vector<Vec3> generators, int dim);

double volume(const Polytope& P);
double surface_area(const Polytope& P);

// Mean width. 2D bodies with interior: perimeter / pi. 2D segments:
// (2/pi) * length. 3D polytopes: exact edge/exterior-angle formula
// (1/(4 pi)) sum_e len_e * angle(n1, n2). 3D segments: length / 2.
double mean_width(const Polytope& P);

struct InballResult {
  double radius;
  Vec3 center;
};

// Largest inscribed ball via the LP  max r  s.t.  <x, u_i> + r <= h_i.
InballResult inball(const Polytope& P);
double inradius(const Polytope& P);

// Max vertex distance from the inball center.
double circumradius(const Polytope& P);

// Enclosing/enclosed ball radii with the explicit constants used by the
// stability machinery. Each returns a radius that is valid for the actual
// body under the stated hypothesis (checked in tests).
double enclosing_radius_from_width(int n, double mean_width);                 // needs o in K
double enclosing_radius_from_inball(int n, double r, double surface_area);    // needs rB^n in K
struct BallSandwich {
  double r0;
  double R0;
};
BallSandwich balls_from_projection_sandwich(int n, double r, double R);       // needs rB^n in PiK in RB^n

}  // namespace opaque
