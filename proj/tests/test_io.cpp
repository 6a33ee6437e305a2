#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <opaque/json_io.hpp>

#include "test_support.hpp"

using namespace opaque;
using namespace testutil;
using doctest::Approx;

TEST_CASE("polytope json round trip is idempotent and value-exact") {
  SplitMix64 rng(163);
  for (int dim : {2, 3}) {
    for (int i = 0; i < 10; ++i) {
      Polytope P = random_body(rng, dim);
      Json j1 = to_json(P);
      Polytope Q = polytope_from_json(j1);
      Json j2 = to_json(Q);
      Polytope R = polytope_from_json(j2);
      CHECK(to_json(R) == j2);  // canonical after one normalization
      for (int k = 0; k < 50; ++k) {
        Vec3 u = rng.sphere_direction(dim);
        CHECK(support(P, u) == Approx(support(Q, u)).epsilon(1e-14));
      }
      CHECK(Q.facets.size() == P.facets.size());
    }
  }
}

TEST_CASE("measure and barrier json round trips are bit-exact") {
  SplitMix64 rng(167);
  Barrier B = random_segments(rng, 5);
  Json jb = to_json(B);
  Barrier B2 = barrier_from_json(jb);
  CHECK(to_json(B2) == jb);

  DirectionalMeasure mu = orientation_measure(B);
  Json jm = to_json(mu);
  DirectionalMeasure mu2 = measure_from_json(jm);
  CHECK(to_json(mu2) == jm);
  CHECK(mu2.even());

  Polytope K3 = random_polytope3(rng);
  Barrier B3 = boundary_barrier(K3);
  Json jb3 = to_json(B3);
  CHECK(to_json(barrier_from_json(jb3)) == jb3);
}

TEST_CASE("ball json") {
  Ball b{Vec3(0.25, -1, 2), 1.5};
  Json j = to_json(b);
  Ball b2 = ball_from_json(j);
  CHECK(b2.radius == b.radius);
  CHECK((b2.center - b.center).norm() == 0.0);
  CHECK_THROWS_AS(ball_from_json(Json{{"center", {0, 0}}, {"radius", -1}}), ParseError);
}

TEST_CASE("schema violations raise parse errors") {
  CHECK_THROWS_AS(polytope_from_json(Json{{"dim", 4}, {"vertices", Json::array()}}), ParseError);
  CHECK_THROWS_AS(polytope_from_json(Json{{"dim", 2}}), ParseError);
  CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"dim":2,"vertices":[[0,0],[1]]})")),
                  ParseError);
  CHECK_THROWS_AS(measure_from_json(Json::parse(R"({"dim":2,"atoms":[{"u":[1,0]}]})")),
                  ParseError);
  CHECK_THROWS_AS(barrier_from_json(Json::parse(R"({"dim":2,"segments":[]})")), ParseError);
  CHECK_THROWS_AS(barrier_from_json(Json::parse(R"({"dim":3,"segments":[[[0,0],[1,1]]]})")),
                  ParseError);
  // degenerate segment is invalid data, reported as a parse failure on load
  CHECK_THROWS_AS(barrier_from_json(Json::parse(R"({"dim":2,"segments":[[[0,0],[0,0]]]})")),
                  ParseError);
}

TEST_CASE("report serialization content") {
  Polytope Q = centered_unit_square();
  Barrier fig1 = fig1_steiner_barrier();

  CertifiedBool cb = is_weak_barrier(fig1, Q);
  Json jc = to_json(cb);
  CHECK(jc["verdict"] == "true");
  CHECK(jc.contains("margin"));
  CHECK(jc.contains("net_level"));

  McReport mc = strong_barrier_mc(fig1, Q, 1000, 42);
  Json jm = to_json(mc);
  CHECK(jm["seed"] == 42);
  CHECK(jm["lines"] == 1000);
  CHECK(jm["ci95"].size() == 2);

  StabilityReport rep = stability_report(fig1, Q, 0.0);
  Json js = to_json(rep);
  CHECK(js["exponent"] == 0.25);
  CHECK(js["beta_table"].size() == 6);
  std::string csv = beta_table_csv(rep);
  CHECK(csv.find("beta,jbeta_mass,steinerb_rhs,chain_rhs") == 0);
  int rows = 0;
  for (char c : csv)
    if (c == '\n') ++rows;
  CHECK(rows == 7);  // header + 6 rows
}

TEST_CASE("file io") {
  std::string path = "io_test_tmp.json";
  Json j = to_json(centered_unit_square());
  save_json_file(path, j);
  Json back = load_json_file(path);
  CHECK(back == j);
  CHECK_THROWS_AS(load_json_file("does_not_exist.json"), ParseError);
  std::remove(path.c_str());
}
