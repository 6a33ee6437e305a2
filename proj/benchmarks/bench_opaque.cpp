#include <benchmark/benchmark.h>

#include <opaque/convexify.hpp>
#include <opaque/direction_net.hpp>
#include <opaque/rng.hpp>
#include <opaque/scenarios.hpp>
#include <opaque/stability.hpp>
#include <opaque/weak_barrier.hpp>

using namespace opaque;

namespace {

Polytope random_symmetric_polytope(std::uint64_t seed, int npairs) {
  SplitMix64 rng(seed);
  for (;;) {
    std::vector<Vec3> pts;
    for (int i = 0; i < npairs; ++i) {
      Vec3 p(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
      pts.push_back(p);
      pts.push_back(-p);
    }
    try {
      return Polytope::from_vertices(3, pts);
    } catch (const DegenerateError&) {
    }
  }
}

void bm_support(benchmark::State& state) {
  Polytope P = random_symmetric_polytope(1, 16);
  auto dirs = random_directions(3, 1024, 2);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(support(P, dirs[k++ & 1023]));
  }
}
BENCHMARK(bm_support);

void bm_zonotope_3d(benchmark::State& state) {
  SplitMix64 rng(3);
  std::vector<Vec3> gens;
  for (int i = 0; i < state.range(0); ++i)
    gens.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zonotope(gens, 3));
  }
}
BENCHMARK(bm_zonotope_3d)->Arg(6)->Arg(12)->Arg(20);

void bm_minkowski_solve(benchmark::State& state) {
  Polytope P = random_symmetric_polytope(5, static_cast<int>(state.range(0)));
  DirectionalMeasure mu = surface_area_measure(P);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_minkowski(mu));
  }
}
BENCHMARK(bm_minkowski_solve)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void bm_bounded_lipschitz(benchmark::State& state) {
  SplitMix64 rng(7);
  std::vector<Atom> a, b;
  for (int i = 0; i < state.range(0); ++i) {
    a.push_back({rng.sphere_direction(2), rng.uniform(0.1, 1.0)});
    b.push_back({rng.sphere_direction(2), rng.uniform(0.1, 1.0)});
  }
  DirectionalMeasure mu(2, a, false), nu(2, b, false);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bounded_lipschitz_distance(mu, nu));
  }
}
BENCHMARK(bm_bounded_lipschitz)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void bm_weak_barrier_3d(benchmark::State& state) {
  Polytope K = cylinder_polytope(3.0);
  Polytope coB = icosphere_polytope(2);
  DirectionalMeasure muK = surface_area_measure(K);
  DirectionalMeasure muB = surface_area_measure(coB);
  for (auto _ : state) {
    benchmark::DoNotOptimize(projection_dominates(muB, muK, 3));
  }
}
BENCHMARK(bm_weak_barrier_3d)->Unit(benchmark::kMillisecond);

void bm_line_sampling(benchmark::State& state) {
  Polytope Q = centered_unit_square();
  Barrier B = half_boundary_barrier(Q);
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_line(Q, B, 0, i++));
  }
}
BENCHMARK(bm_line_sampling);

}  // namespace

BENCHMARK_MAIN();
