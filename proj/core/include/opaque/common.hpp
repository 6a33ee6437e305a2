#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace opaque {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Absolute tolerance for incidence tests (vertex-on-facet, ties).
inline constexpr double kIncidenceTol = 1e-9;
// Direction/atom merge tolerance (Euclidean distance of unit vectors).
inline constexpr double kMergeTol = 1e-9;
inline constexpr double kTinyTol = 1e-12;

struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ContainmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Volume kappa_n of the n-dimensional unit ball, n >= 0.
inline double unit_ball_volume(int n) {
  switch (n) {
    case 0: return 1.0;
    case 1: return 2.0;
    case 2: return std::numbers::pi;
    case 3: return 4.0 * std::numbers::pi / 3.0;
    default:
      return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
  }
}

// Surface measure omega_n of the unit sphere S^{n-1} in R^n.
inline double sphere_surface(int n) { return n * unit_ball_volume(n); }

// Counter-clockwise rotation by 90 degrees in the xy-plane.
inline Vec3 rot90(const Vec3& v) { return Vec3(-v.y(), v.x(), 0.0); }

// Unit vector in R^dim; z is forced to 0 for dim == 2 and the result is
// renormalized. Construction fails on (near-)zero input.
class Direction {
 public:
  Direction(const Vec3& v, int dim) : dim_(dim) {
    if (dim != 2 && dim != 3) throw InvalidDataError("Direction: dim must be 2 or 3");
    Vec3 u = v;
    if (dim == 2) u.z() = 0.0;
    double n = u.norm();
    if (n < kTinyTol) throw DegenerateError("Direction: zero vector");
    u_ = u / n;
  }
  const Vec3& vec() const { return u_; }
  int dim() const { return dim_; }

 private:
  Vec3 u_;
  int dim_;
};

inline Vec3 unit(const Vec3& v) {
  double n = v.norm();
  if (n < kTinyTol) throw DegenerateError("unit: zero vector");
  return v / n;
}

// Angle between unit vectors, in [0, pi].
inline double angle_between(const Vec3& a, const Vec3& b) {
  double c = a.dot(b);
  c = std::clamp(c, -1.0, 1.0);
  return std::acos(c);
}

}  // namespace opaque
