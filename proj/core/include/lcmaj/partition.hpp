#pragma once

#include <cstddef>
#include <vector>

#include "lcmaj/poly.hpp"

namespace lcmaj {

enum class monotonicity { increasing, decreasing, constant };
enum class curvature_class { strictly_concave, linear, strictly_convex };

// Maximal open subinterval on which the containing piece keeps one monotonicity
// and one curvature sign. group_id numbers maximal runs of strictly concave
// cells; non-concave cells carry -1 and separate runs.
struct cell {
    interval span;
    std::size_t piece_index = 0;
    cubic_piece piece;  // full source piece, not clipped to span
    monotonicity mono = monotonicity::constant;
    curvature_class curv = curvature_class::linear;
    int group_id = -1;
};

struct refined_partition {
    interval working;
    std::vector<cell> cells;
};

// Global maximum structure: value, the maximal closed intervals where it is
// attained (points as degenerate intervals), and their closed convex hull.
struct max_structure {
    double max_value = 0.0;
    std::vector<interval> maximizers;
    interval plateau_hull;
};

// Strictly concave and increasing cell, merged with adjacent cells of the same
// piece; the only places a bridge tangency can land.
struct concave_member {
    interval span;
    std::size_t piece_index = 0;
    cubic_piece piece;
    int group_id = -1;
};

max_structure global_max(const piecewise_cubic& pw);

// Knots, slope roots and curvature roots of pw inside working, classified.
refined_partition refine(const piecewise_cubic& pw, interval working);

std::vector<concave_member> concave_increasing_members(const refined_partition& rp);

// Rightmost maximizer of pw restricted to range (a subinterval of rp.working).
// If max_value is given it receives the restricted maximum.
double rightmost_max_location(const piecewise_cubic& pw, const refined_partition& rp,
                              interval range, double* max_value = nullptr);

}  // namespace lcmaj
