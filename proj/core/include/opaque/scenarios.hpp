#pragma once

#include "opaque/direction_net.hpp"
#include "opaque/measures.hpp"

namespace opaque {

// Centered unit square Q = [-1/2, 1/2]^2.
Polytope centered_unit_square();

// Centered axis-parallel cube of the given side length.
Polytope centered_cube(double side = 1.0);

// The short barrier of the centered unit square: Steiner tree of three
// corners (meeting at s = (0.2113, 0.2113) in corner coordinates) plus the
// half-diagonal to the fourth corner. Length about 2.639.
Barrier fig1_steiner_barrier();

// (1/2) boundary of a centered body as a barrier.
Barrier half_boundary_barrier(const Polytope& P);

// Centered cylinder with axis e1, length s, radius 1/(2s), regular m-gon
// cross-section.
Polytope cylinder_polytope(double s, int cross_section_sides = 64);

}  // namespace opaque
