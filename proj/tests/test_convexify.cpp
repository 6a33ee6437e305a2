#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include <cmath>

using namespace opaque;
using namespace testutil;
using doctest::Approx;

TEST_CASE("convexification of two orthogonal segments is the unit square") {
  Barrier B = Barrier::from_segments(
      {{Vec3(3, 1, 0), Vec3(4, 1, 0)}, {Vec3(-2, 0, 0), Vec3(-2, 1, 0)}});
  Polytope co = convexify_2d(B);
  CHECK(volume(co) == Approx(1.0).epsilon(1e-12));
  CHECK(support(co, Vec3(1, 0, 0)) == Approx(0.5).epsilon(1e-12));
  CHECK(support(co, Vec3(0, -1, 0)) == Approx(0.5).epsilon(1e-12));
}

TEST_CASE("half boundary of a symmetric polygon convexifies back to the body") {
  SplitMix64 rng(61);
  for (int rep = 0; rep < 10; ++rep) {
    Polytope K = random_symmetric_polygon(rng);
    Barrier B = half_boundary_barrier(K);
    Polytope co = convexify(B);
    for (int k = 0; k < 100; ++k) {
      Vec3 u = rng.sphere_direction(2);
      CHECK(support(co, u) == Approx(support(K, u)).epsilon(1e-9));
    }
    CHECK(surface_area(co) == Approx(2.0 * B.surface_area()).epsilon(1e-12));
  }
}

TEST_CASE("fig1 barrier convexification: perimeter, containment, touching pair") {
  Barrier B = fig1_steiner_barrier();
  Polytope co = convexify_2d(B);
  CHECK(surface_area(co) == Approx(2.0 * B.surface_area()).epsilon(1e-12));
  CHECK(surface_area(co) == Approx(5.278).epsilon(2e-4));

  Polytope Q = centered_unit_square();
  int touching = 0;
  for (const auto& v : Q.vertices) {
    CHECK(contains_point(co, v, 1e-9));
    double slack = 1e300;
    for (const auto& f : co.facets) slack = std::min(slack, f.offset - f.normal.dot(v));
    if (slack <= 1e-9) ++touching;
  }
  CHECK(touching == 2);  // one antipodal vertex pair on the boundary
}

TEST_CASE("perimeter identity over random segment sets") {
  SplitMix64 rng(67);
  for (int rep = 0; rep < 50; ++rep) {
    Barrier B = random_segments(rng, 2 + static_cast<int>(rng.uniform(0, 6)));
    Polytope co;
    try {
      co = convexify_2d(B);
    } catch (const DegenerateError&) {
      continue;
    }
    CHECK(std::fabs(surface_area(co) - 2.0 * B.surface_area()) < 1e-9);
  }
}

TEST_CASE("translation invariance of the convexification") {
  SplitMix64 rng(71);
  Barrier B = random_segments(rng, 5);
  Polytope co = convexify_2d(B);
  Barrier Bt = B;
  // translate pieces independently
  for (auto& p : Bt.pieces) {
    Vec3 t(rng.uniform(-3, 3), rng.uniform(-3, 3), 0.0);
    p.p[0] += t;
    p.p[1] += t;
  }
  Polytope cot = convexify_2d(Bt);
  CHECK(hausdorff_vertex_distance(co.vertices, cot.vertices) < 1e-9);
}

TEST_CASE("origin symmetry of convexifications") {
  SplitMix64 rng(73);
  Barrier B = random_segments(rng, 6);
  Polytope co = convexify_2d(B);
  for (int k = 0; k < 100; ++k) {
    Vec3 u = rng.sphere_direction(2);
    CHECK(std::fabs(support(co, u) - support(co, Vec3(-u))) < 1e-9);
  }
}

TEST_CASE("single segment has no convexification") {
  Barrier B = Barrier::from_segments({{Vec3(0, 0, 0), Vec3(1, 1, 0)}});
  CHECK_THROWS_AS(convexify(B), std::runtime_error);
}

TEST_CASE("minkowski solver reconstructs the cube") {
  std::vector<Atom> atoms;
  for (int k = 0; k < 3; ++k) {
    Vec3 u = Vec3::Zero();
    u[k] = 1.0;
    atoms.push_back({u, 1.0});
    atoms.push_back({-u, 1.0});
  }
  DirectionalMeasure mu(3, atoms, true);
  MinkowskiSolution sol = solve_minkowski(mu);
  CHECK(sol.residual < 1e-6);
  CHECK(sol.vanished.empty());
  Polytope expected = centered_cube(1.0);
  CHECK(hausdorff_vertex_distance(sol.polytope.vertices, expected.vertices) < 1e-5);
  std::string why;
  CHECK(sol.polytope.valid(&why));
}

TEST_CASE("minkowski solver reconstructs the octahedron") {
  std::vector<Atom> atoms;
  double w = std::sqrt(3.0) / 2.0;  // facet area of conv{+-e_i}
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) atoms.push_back({Vec3(sx, sy, sz).normalized(), w});
  DirectionalMeasure mu(3, atoms, true);
  MinkowskiSolution sol = solve_minkowski(mu);
  CHECK(sol.residual < 1e-6);
  Polytope expected = Polytope::from_vertices(
      3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  CHECK(hausdorff_vertex_distance(sol.polytope.vertices, expected.vertices) < 1e-5);
}

TEST_CASE("minkowski solver round trips random symmetric polytopes") {
  SplitMix64 rng(79);
  for (int rep = 0; rep < 10; ++rep) {
    Polytope P = random_symmetric_polytope3(rng);
    DirectionalMeasure mu = surface_area_measure(P);
    MinkowskiSolution sol = solve_minkowski(mu);
    CHECK(sol.residual < 1e-6);
    Vec3 c0 = vertex_centroid(sol.polytope.vertices);
    Vec3 c1 = vertex_centroid(P.vertices);
    std::vector<Vec3> a = sol.polytope.vertices, b = P.vertices;
    for (auto& v : a) v -= c0;
    for (auto& v : b) v -= c1;
    CHECK(hausdorff_vertex_distance(a, b) < 1e-5);
    CHECK(c0.norm() < 1e-8);  // solution centered at the origin
  }
}

TEST_CASE("minkowski solver is unique across initializations") {
  SplitMix64 rng(83);
  Polytope P = random_symmetric_polytope3(rng);
  DirectionalMeasure mu = surface_area_measure(P);
  MinkowskiOptions a, b;
  b.init_perturb = 0.4;
  b.init_seed = 999;
  MinkowskiSolution s1 = solve_minkowski(mu, a);
  MinkowskiSolution s2 = solve_minkowski(mu, b);
  CHECK(hausdorff_vertex_distance(s1.polytope.vertices, s2.polytope.vertices) < 1e-5);
}

TEST_CASE("solver rejects bad data and reports non-convergence") {
  DirectionalMeasure odd(3, {{Vec3(0, 0, 1), 1.0}, {Vec3(0, 0, -1), 1.0},
                             {Vec3(1, 0, 0), 1.0}, {Vec3(-1, 0, 0), 1.0}},
                         true);
  CHECK_THROWS_AS(solve_minkowski(odd), InvalidDataError);  // great subsphere

  std::vector<Atom> atoms;
  for (int k = 0; k < 3; ++k) {
    Vec3 u = Vec3::Zero();
    u[k] = 1.0;
    atoms.push_back({u, 1.0});
    atoms.push_back({-u, 1.0});
  }
  DirectionalMeasure cube(3, atoms, true);
  MinkowskiOptions opts;
  opts.max_iter = 0;
  try {
    solve_minkowski(cube, opts);
    CHECK(false);
  } catch (const NotConvergedError& e) {
    CHECK(e.best.residual > 0);
    CHECK(e.best.polytope.vertices.size() >= 4);
  }
}

TEST_CASE("three axis-normal unit squares convexify to the unit cube") {
  auto square_tris = [](int axis, const Vec3& at) {
    Vec3 e1 = Vec3::Zero(), e2 = Vec3::Zero();
    e1[(axis + 1) % 3] = 1.0;
    e2[(axis + 2) % 3] = 1.0;
    std::vector<std::array<Vec3, 3>> tris = {
        {at, at + e1, at + e2}, {at + e1, at + e1 + e2, at + e2}};
    return tris;
  };
  std::vector<std::array<Vec3, 3>> tris;
  for (int axis = 0; axis < 3; ++axis) {
    Vec3 at(axis * 1.7, -axis * 0.4, 0.3 * axis);  // arbitrary positions
    for (auto& t : square_tris(axis, at)) tris.push_back(t);
  }
  Barrier B = Barrier::from_triangles(tris);
  Polytope co = convexify(B);
  Polytope expected = centered_cube(1.0);
  CHECK(hausdorff_vertex_distance(co.vertices, expected.vertices) < 1e-5);
}

TEST_CASE("boundary barrier of a symmetric 3d body convexifies to sqrt(2) K") {
  SplitMix64 rng(89);
  Polytope K = random_symmetric_polytope3(rng);
  Barrier B = boundary_barrier(K);
  Polytope co = convexify(B);
  CHECK(surface_area(co) == Approx(2.0 * B.surface_area()).epsilon(1e-5));
  Polytope expected = scaled(K, std::sqrt(2.0));
  CHECK(hausdorff_vertex_distance(co.vertices, expected.vertices) < 1e-5);
}
