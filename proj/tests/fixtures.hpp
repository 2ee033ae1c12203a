#pragma once

#include <cstdint>
#include <vector>

#include "lcmaj/poly.hpp"
#include "lcmaj/spline.hpp"

namespace lcmaj::testing {

// Ten-piece demo function on [0, 10]: two bridge regions left of the plateau
// [4, 5], a dip back to 3 at x = 8, and a boundary-terminated tail. Maximum 3,
// maximizer hull [4, 8].
piecewise_cubic demo_function();

// Trimodal density on [0, 6]: one broad mode at 3 and two narrow modes at 3.8
// and 4.2. Its integral is strictly increasing.
double trimodal_density(double x);

// Antiderivative of trimodal_density with F(0) = 0, via the Gaussian error
// function identity (exact to machine precision, no quadrature error).
double trimodal_cdf(double x);

// Clamped-spline data for trimodal_cdf on n equal subintervals of [0, 6].
spline_problem trimodal_spline_problem(std::size_t subintervals);

// Four Hermite pieces on [0, 4]: interior peak of 5 at x = 1, dip to 1 at
// x = 2, and the global maximum 6 at the right boundary.
piecewise_cubic boundary_peak_function();

// Random differentiable piecewise cubic: Hermite data per piece, occasional
// linear and constant pieces, desk-scale knots and values. Deterministic in
// the seed.
piecewise_cubic random_piecewise(std::uint64_t seed, std::size_t max_pieces = 8);

}  // namespace lcmaj::testing
