#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "opaque/geometry.hpp"

namespace opaque {

struct Atom {
  Vec3 u;    // unit direction
  double w;  // strictly positive weight
};

// Finite discrete measure on S^{n-1}. Directions are renormalized and atoms
// closer than kMergeTol are merged at construction. When the even flag is
// set, the antipodal pairing is validated rather than enforced silently.
class DirectionalMeasure {
 public:
  DirectionalMeasure(int dim, std::vector<Atom> atoms, bool even);

  int dim() const { return dim_; }
  bool even() const { return even_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  double mass() const;

  DirectionalMeasure reflected() const;       // u -> -u
  DirectionalMeasure scaled(double s) const;  // weights * s

 private:
  int dim_;
  bool even_;
  std::vector<Atom> atoms_;
};

// Finite piecewise-linear barrier: segments in the plane, triangles in space.
// Each piece carries its length/area and a unit normal.
struct Barrier {
  struct Piece {
    std::array<Vec3, 3> p;
    int npts;        // 2 = segment, 3 = triangle
    double measure;  // length or area
    Vec3 normal;
  };

  int dim = 2;
  std::vector<Piece> pieces;

  static Barrier from_segments(const std::vector<std::array<Vec3, 2>>& segments);
  static Barrier from_triangles(const std::vector<std::array<Vec3, 3>>& triangles);

  double surface_area() const;
  Barrier translated(const Vec3& t) const;
  Barrier scaled(double s) const;  // about the origin
};

// Boundary of a full-dimensional polytope as a barrier (2D: edges,
// 3D: boundary triangles).
Barrier boundary_barrier(const Polytope& P);

// Splits every piece into `parts` congruent pieces (edge subdivision in 2D,
// corner-midpoint subdivision in 3D).
Barrier refined(const Barrier& B, int parts);

// S*(B, .): atoms at +-(piece normal) weighted by the piece measure; the
// total mass is twice the surface area of B.
DirectionalMeasure orientation_measure(const Barrier& B);

// S(K, .): atoms at facet normals weighted by facet areas.
DirectionalMeasure surface_area_measure(const Polytope& P);

struct MinkowskiDataReport {
  bool pass = false;
  bool centroid_ok = false;
  double centroid_residual = 0.0;  // |sum w u| / mass
  bool spans = false;
  double sigma_min = 0.0;  // smallest singular value of rows sqrt(w_j) u_j
  std::string violation;
};

// Necessary-and-sufficient data conditions for the Minkowski problem:
// weighted directions sum to o and the atoms are not concentrated on a great
// subsphere.
MinkowskiDataReport validate_minkowski_data(const DirectionalMeasure& mu);

// S(Blaschke body of P, .) = (S(P,.) + S(-P,.)) / 2; always even.
DirectionalMeasure blaschke_measure(const Polytope& P);

// (1/2) sum_j w_j |<u, u_j>|; the hyperplane projection area induced by mu.
double projection_function(const DirectionalMeasure& mu, const Vec3& u);

// Zonotope with support function equal to the projection function.
// The spec-facing variant requires mu to be even and valid Minkowski data.
Polytope projection_body(const DirectionalMeasure& mu);
// Same construction for arbitrary finite measures (projection bodies of
// non-symmetric polytopes).
Polytope projection_body_any(const DirectionalMeasure& mu);

// Both sides of the identity w(Pi mu) = (2 kappa_{n-1} / omega_n) * mass(mu):
// first the geometric mean width of the projection body, then the mass form.
std::pair<double, double> mean_width_projection_identity(const DirectionalMeasure& mu);

}  // namespace opaque
