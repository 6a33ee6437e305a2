#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "opaque/measures.hpp"

namespace opaque {

// Zonogon (1/2) sum [-d_k, d_k] over the segment vectors of B, centered at
// the origin. Its perimeter is exactly 2 |B|.
Polytope convexify_2d(const Barrier& B);

struct MinkowskiSolution {
  Polytope polytope;
  double residual = 0.0;  // max relative facet-area error
  int iterations = 0;
  std::vector<std::pair<int, double>> log;  // (iteration, residual)
  std::vector<int> vanished;                // antipodal pair indices with area ~ 0
};

struct NotConvergedError : std::runtime_error {
  MinkowskiSolution best;
  NotConvergedError(std::string msg, MinkowskiSolution b)
      : std::runtime_error(std::move(msg)), best(std::move(b)) {}
};

struct MinkowskiOptions {
  double tol = 1e-6;
  int max_iter = 500;
  // Relative multiplicative perturbation of the uniform start (used to test
  // solution uniqueness from different initializations).
  double init_perturb = 0.0;
  std::uint64_t init_seed = 0;
};

// Reconstructs the origin-symmetric 3D polytope whose facet areas match an
// even measure satisfying the Minkowski data conditions: damped Newton on
// the convex functional  sum_j w_j h_j - (mass/n) log V(h)  over support
// numbers, followed by an exact rescale so the areas match the weights.
MinkowskiSolution solve_minkowski(const DirectionalMeasure& mu,
                                  const MinkowskiOptions& opts = {});

// co(B): closed-form zonogon for n = 2, Minkowski solve of the orientation
// measure for n = 3.
Polytope convexify(const Barrier& B);

}  // namespace opaque
