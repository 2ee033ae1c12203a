#pragma once

#include <cstddef>
#include <vector>

#include "lcmaj/poly.hpp"

namespace lcmaj {

struct spline_problem {
    std::vector<double> nodes;   // strictly increasing, at least two
    std::vector<double> values;  // same size as nodes
    double d_left = 0.0;         // clamped end slopes
    double d_right = 0.0;
};

// Clamped C2 cubic interpolant through the nodes, moment form with a
// tridiagonal solve.
piecewise_cubic clamped_spline(const spline_problem& prob);

struct mesh_plan {
    double norm_h = 0.0;     // largest admissible uniform spacing
    std::size_t count = 0;   // subintervals needed at that spacing
};

// Spacing that keeps the interpolation value error within eps for functions
// with |fourth derivative| <= fourth_deriv_bound, and the subinterval count
// for a domain of the given length (smallest integer exceeding length/norm_h).
mesh_plan mesh_for_tolerance(double eps, double fourth_deriv_bound, double length);

// Certified consequences of interpolating on a mesh of norm mesh_norm:
// deriv_bound controls |F' - S'|, the pointwise majorant gap grows at most
// linearly from each domain end, and the level-function error contracts to
// the derivative error.
struct error_certificate {
    interval domain;
    double mesh_norm = 0.0;
    double fourth_deriv_bound = 0.0;
    double deriv_bound = 0.0;
    double sup_majorant_bound = 0.0;
    double level_bound = 0.0;

    double majorant_bound_at(double x) const;
};

error_certificate certify(interval domain, double mesh_norm, double fourth_deriv_bound);

}  // namespace lcmaj
