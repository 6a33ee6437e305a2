#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include <cmath>
#include <numbers>

using namespace opaque;
using namespace testutil;
using doctest::Approx;

namespace {
const double kPi = std::numbers::pi;
}

TEST_CASE("support of axis bodies") {
  Polytope Q = centered_unit_square();
  CHECK(support(Q, Vec3(1, 0, 0)) == Approx(0.5).epsilon(1e-12));

  Polytope C = centered_cube(1.0);
  // max over the 8 corners of <(1,1,1)/sqrt(3), x> = 3/(2 sqrt(3))
  CHECK(support(C, Vec3(1, 1, 1).normalized()) ==
        Approx(3.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-12));

  Polytope seg = Polytope::from_vertices(2, {{0, 0, 0}, {1, 0, 0}});
  CHECK(seg.lower_dimensional);
  CHECK(support(seg, Vec3(-1, 0, 0)) == Approx(0.0).epsilon(1e-12));
}

TEST_CASE("polytope invariants on constructed bodies") {
  std::string why;
  CHECK(centered_unit_square().valid(&why));
  CHECK(centered_cube(1.0).valid(&why));
  CHECK(cylinder_polytope(3.0).valid(&why));
  CHECK(icosphere_polytope(2).valid(&why));
  SplitMix64 rng(11);
  for (int i = 0; i < 20; ++i) {
    CHECK(random_polygon(rng).valid(&why));
    CHECK(random_polytope3(rng).valid(&why));
  }
}

TEST_CASE("minkowski sum basics") {
  Polytope s1 = Polytope::from_vertices(2, {{0, 0, 0}, {1, 0, 0}});
  Polytope s2 = Polytope::from_vertices(2, {{0, 0, 0}, {0, 1, 0}});
  Polytope sq = minkowski_sum_2d(s1, s2);
  CHECK(sq.vertices.size() == 4);
  CHECK(volume(sq) == Approx(1.0).epsilon(1e-12));
  CHECK(support(sq, Vec3(1, 1, 0).normalized()) == Approx(std::sqrt(2.0)).epsilon(1e-12));

  SplitMix64 rng(7);
  Polytope P = random_polygon(rng);
  Polytope origin = Polytope::from_vertices(2, {{0, 0, 0}});
  Polytope same = minkowski_sum_2d(P, origin);
  CHECK(hausdorff_vertex_distance(P.vertices, same.vertices) < 1e-12);
}

TEST_CASE("minkowski sum of triangle and its reflection matches brute force") {
  Polytope T = Polytope::from_vertices(2, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  Polytope S = minkowski_sum_2d(T, reflected(T));
  Polytope oracle = minkowski_brute_force(T, reflected(T));
  CHECK(volume(S) == Approx(volume(oracle)).epsilon(1e-12));
  CHECK(S.vertices.size() == 6);  // hexagon
  SplitMix64 rng(3);
  for (int i = 0; i < 50; ++i) {
    Vec3 u = rng.sphere_direction(2);
    CHECK(support(S, u) == Approx(support(oracle, u)).epsilon(1e-10));
  }
}

TEST_CASE("support additivity of minkowski sums on random polygons") {
  SplitMix64 rng(21);
  for (int rep = 0; rep < 10; ++rep) {
    Polytope P = random_polygon(rng), Q = random_polygon(rng);
    Polytope S = minkowski_sum_2d(P, Q);
    for (int k = 0; k < 100; ++k) {
      Vec3 u = rng.sphere_direction(2);
      CHECK(std::fabs(support(S, u) - support(P, u) - support(Q, u)) < 1e-9);
    }
  }
}

TEST_CASE("zonotope squares and cubes") {
  Polytope Z2 = zonotope({Vec3(1, 0, 0), Vec3(0, 1, 0)}, 2);
  CHECK(volume(Z2) == Approx(1.0).epsilon(1e-12));
  CHECK(support(Z2, Vec3(1, 0, 0)) == Approx(0.5).epsilon(1e-12));

  Polytope Z3 = zonotope({Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)}, 3);
  CHECK(Z3.vertices.size() == 8);
  CHECK(volume(Z3) == Approx(1.0).epsilon(1e-9));
  CHECK(surface_area(Z3) == Approx(6.0).epsilon(1e-9));
  CHECK(support(Z3, Vec3(1, 1, 1).normalized()) ==
        Approx(1.5 / std::sqrt(3.0)).epsilon(1e-12));

  CHECK_THROWS_AS(zonotope({Vec3(1, 0, 0), Vec3(2, 0, 0)}, 2), DegenerateError);
  CHECK_THROWS_AS(zonotope({Vec3(1, 0, 0), Vec3(0, 1, 0)}, 3), DegenerateError);
}

TEST_CASE("zonogon support identity at 16 angles") {
  std::vector<Vec3> gens = {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(1, 1, 0).normalized()};
  Polytope Z = zonotope(gens, 2);
  for (int k = 0; k < 16; ++k) {
    double t = 2.0 * kPi * k / 16.0;
    Vec3 u(std::cos(t), std::sin(t), 0.0);
    double oracle = 0.0;
    for (const auto& g : gens) oracle += 0.5 * std::fabs(u.dot(g));
    CHECK(support(Z, u) == Approx(oracle).epsilon(1e-12));
  }
  double per = surface_area(Z);
  CHECK(per == Approx(2.0 * (1.0 + 1.0 + 1.0)).epsilon(1e-12));  // 2 * sum of lengths
}

TEST_CASE("zonotope support identity on random 3d generators") {
  SplitMix64 rng(5);
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<Vec3> gens;
    for (int i = 0; i < 6; ++i)
      gens.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    Polytope Z;
    try {
      Z = zonotope(gens, 3);
    } catch (const DegenerateError&) {
      continue;
    }
    // independent volume oracle: sum over generator triples of |det|
    double vol = 0.0;
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t b = a + 1; b < gens.size(); ++b)
        for (std::size_t c = b + 1; c < gens.size(); ++c)
          vol += std::fabs(gens[a].dot(gens[b].cross(gens[c])));
    CHECK(volume(Z) == Approx(vol).epsilon(1e-8));
    for (int k = 0; k < 200; ++k) {
      Vec3 u = rng.sphere_direction(3);
      double oracle = 0.0;
      for (const auto& g : gens) oracle += 0.5 * std::fabs(u.dot(g));
      CHECK(support(Z, u) == Approx(oracle).epsilon(1e-9));
    }
    std::string why;
    CHECK(Z.valid(&why));
  }
}

TEST_CASE("volume, surface area, mean width of reference bodies") {
  Polytope Q = centered_unit_square();
  CHECK(volume(Q) == Approx(1.0).epsilon(1e-12));
  CHECK(surface_area(Q) == Approx(4.0).epsilon(1e-12));
  CHECK(mean_width(Q) == Approx(4.0 / kPi).epsilon(1e-12));

  Polytope seg = Polytope::from_vertices(2, {{0, 0, 0}, {0.7, 0, 0}});
  CHECK(mean_width(seg) == Approx(2.0 * 0.7 / kPi).epsilon(1e-12));

  Polytope C = centered_cube(1.0);
  CHECK(volume(C) == Approx(1.0).epsilon(1e-9));
  CHECK(surface_area(C) == Approx(6.0).epsilon(1e-9));
  CHECK(mean_width(C) == Approx(1.5).epsilon(1e-9));

  Polytope seg3 = Polytope::from_vertices(3, {{0, 0, 0}, {0, 0, 2}});
  CHECK(mean_width(seg3) == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("3d mean width cross-checked by quadrature") {
  SplitMix64 rng(17);
  TriMesh mesh = icosphere_mesh(4);
  for (int rep = 0; rep < 5; ++rep) {
    Polytope P = random_polytope3(rng);
    double w = mean_width(P);
    double quad = 0.0, total = 0.0;
    for (const auto& t : mesh.tris) {
      const Vec3 &a = mesh.pts[t[0]], &b = mesh.pts[t[1]], &c = mesh.pts[t[2]];
      double num = a.dot(b.cross(c));
      double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
      double area = std::fabs(2.0 * std::atan2(num, den));
      quad += area * support(P, (a + b + c).normalized());
      total += area;
    }
    quad *= 2.0 / total;
    CHECK(w == Approx(quad).epsilon(2e-3));
  }
}

TEST_CASE("inradius of reference bodies") {
  CHECK(inradius(centered_unit_square()) == Approx(0.5).epsilon(1e-9));
  CHECK(inradius(centered_cube(1.0)) == Approx(0.5).epsilon(1e-9));

  Polytope T = Polytope::from_vertices(2, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  // classical r = area / semiperimeter
  double oracle = 0.5 / ((1.0 + 1.0 + std::sqrt(2.0)) / 2.0);
  CHECK(inradius(T) == Approx(oracle).epsilon(1e-9));
  CHECK(oracle == Approx((2.0 - std::sqrt(2.0)) / 2.0).epsilon(1e-12));
}

TEST_CASE("inradius bounds V/S <= rho <= n V/S on random bodies") {
  SplitMix64 rng(23);
  for (int dim : {2, 3}) {
    for (int i = 0; i < 100; ++i) {
      Polytope P = random_body(rng, dim, dim == 2 ? 7 : 9);
      double rho = inradius(P);
      double V = volume(P), S = surface_area(P);
      CHECK(rho >= V / S - 1e-9);
      CHECK(rho <= dim * V / S + 1e-9);
    }
  }
}

TEST_CASE("monotonicity of mean width and surface area under inclusion") {
  SplitMix64 rng(29);
  for (int dim : {2, 3}) {
    for (int i = 0; i < 20; ++i) {
      Polytope P = random_body(rng, dim);
      // P' = hull of a subset of P's vertices, shrunk toward the centroid
      Vec3 c = vertex_centroid(P.vertices);
      std::vector<Vec3> sub;
      for (const auto& v : P.vertices)
        sub.push_back(c + 0.9 * (v - c));
      Polytope Pp;
      try {
        Pp = Polytope::from_vertices(dim, sub);
      } catch (const DegenerateError&) {
        continue;
      }
      CHECK(mean_width(Pp) <= mean_width(P) + 1e-9);
      CHECK(surface_area(Pp) <= surface_area(P) + 1e-9);
    }
  }
}

TEST_CASE("facet closure of constructed polytopes") {
  SplitMix64 rng(31);
  auto closure = [](const Polytope& P) {
    Vec3 s = Vec3::Zero();
    for (const auto& f : P.facets) s += f.area * f.normal;
    return s.norm();
  };
  CHECK(closure(centered_cube(1.0)) < 1e-9);
  CHECK(closure(cylinder_polytope(2.5)) < 1e-9);
  for (int i = 0; i < 30; ++i) {
    CHECK(closure(random_polygon(rng)) < 1e-9);
    CHECK(closure(random_polytope3(rng)) < 1e-9);
  }
}

TEST_CASE("enclosing radii from the three ball lemmas") {
  // (i) unit square contains the origin: R0 = (omega_2 / (2 kappa_1)) w = 2
  double R0 = enclosing_radius_from_width(2, 4.0 / kPi);
  CHECK(R0 == Approx(2.0).epsilon(1e-12));
  CHECK(R0 >= circumradius(centered_unit_square()) - 1e-12);

  // (ii) unit cube with inball radius 1/2: 2^2 * kappa_1^{-1} * (1/2)^{-1} * 6 = 24
  double R1 = enclosing_radius_from_inball(3, 0.5, 6.0);
  CHECK(R1 == Approx(24.0).epsilon(1e-12));
  CHECK(R1 >= circumradius(centered_cube(1.0)) - 1e-12);

  // (iii) ball: Pi B^3 = pi B^3, r = R = pi
  BallSandwich bs = balls_from_projection_sandwich(3, kPi, kPi);
  CHECK(bs.R0 == Approx(4.0).epsilon(1e-12));
  CHECK(bs.r0 == Approx(kPi / 16.0).epsilon(1e-12));
  CHECK(bs.R0 >= 1.0);  // B^3 inside 4 B^3
  CHECK(bs.r0 <= 1.0);  // pi/16 B^3 inside B^3

  // validity on random symmetric bodies: the lemma radii must enclose/embed
  SplitMix64 rng(37);
  for (int i = 0; i < 20; ++i) {
    Polytope P = random_symmetric_polytope3(rng);
    double w = mean_width(P);
    CHECK(enclosing_radius_from_width(3, w) >= circumradius(P) - 1e-9);
    double rho = inradius(P);
    CHECK(enclosing_radius_from_inball(3, rho, surface_area(P)) >=
          circumradius(P) - 1e-9);
  }
}

TEST_CASE("degenerate bodies are flagged and restricted") {
  Polytope seg = Polytope::from_vertices(2, {{0, 0, 0}, {1, 1, 0}});
  CHECK(seg.lower_dimensional);
  CHECK_THROWS_AS(volume(seg), DegenerateError);
  CHECK_THROWS_AS(surface_area(seg), DegenerateError);
  CHECK_THROWS_AS(inball(seg), DegenerateError);
  CHECK_NOTHROW(mean_width(seg));
  CHECK_NOTHROW(support(seg, Vec3(0, 1, 0)));
}

TEST_CASE("cylinder polytope geometry") {
  double s = 3.0;
  Polytope K = cylinder_polytope(s);
  double r = 1.0 / (2.0 * s);
  // volume of the inscribed 64-gon prism
  double poly_area = 0.5 * 64 * r * r * std::sin(2.0 * kPi / 64);
  CHECK(volume(K) == Approx(poly_area * s).epsilon(1e-9));
  CHECK(support(K, Vec3(1, 0, 0)) == Approx(s / 2).epsilon(1e-12));
  // origin-symmetric
  SplitMix64 rng(41);
  for (int k = 0; k < 50; ++k) {
    Vec3 u = rng.sphere_direction(3);
    CHECK(support(K, u) == Approx(support(K, Vec3(-u))).epsilon(1e-10));
  }
}
