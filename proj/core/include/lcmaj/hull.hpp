#pragma once

#include <cstddef>
#include <vector>

#include "lcmaj/majorant.hpp"
#include "lcmaj/poly.hpp"

namespace lcmaj {

// Upper convex hull of F sampled on a uniform grid; an independent O(n) check
// of the exact majorant, accurate to O(h^2) in the grid spacing.
struct grid_hull {
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<double> hull_ys;                // hull evaluated back on the grid
    std::vector<std::size_t> hull_vertices;     // indices of hull corners
};

// Core form: hull of an arbitrary sampled graph.
grid_hull grid_upper_hull(std::vector<double> xs, std::vector<double> ys);

// Sampling convenience over a piecewise cubic's domain.
grid_hull grid_upper_hull(const piecewise_cubic& pw, std::size_t grid_n, unsigned threads = 1);

struct hull_comparison {
    double sup_diff = 0.0;            // max |majorant - hull| on the grid
    double endpoint_mismatch = 0.0;   // worst matched component-endpoint distance
    std::size_t exact_count = 0;
    std::size_t oracle_count = 0;
    bool components_matched = false;  // counts equal, endpoints within 2 cells
    std::vector<interval> oracle_components;
};

hull_comparison compare_with_hull(const piecewise_cubic& pw, const majorant_result& result,
                                  std::size_t grid_n, unsigned threads = 1);

}  // namespace lcmaj
