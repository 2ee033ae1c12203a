#pragma once

#include <vector>

#include "lcmaj/bridge.hpp"
#include "lcmaj/partition.hpp"
#include "lcmaj/poly.hpp"

namespace lcmaj {

// Derivative of the majorant: continuous piecewise quadratic, constant on
// bridge spans. Not C1, so it is not itself a valid piecewise_cubic input.
struct level_function {
    std::vector<double> knots;
    std::vector<cubic_piece> pieces;  // quadratic rows, coeffs[0] == 0

    double operator()(double x) const;
};

struct majorant_result {
    max_structure max_info;
    std::vector<interval> components;  // maximal bridge intervals, ascending
    piecewise_cubic majorant;
    level_function level;
};

majorant_result analyze(const piecewise_cubic& pw, const trace_sink& trace = {});

// March over [working.lo, working.hi] where the maximum sits at working.hi.
// anchored_right marks working.hi as a domain boundary whose tangency is
// waived (the unique-maximum-at-the-boundary case).
std::vector<interval> components_left(const piecewise_cubic& pw, interval working,
                                      bool anchored_right, double max_value,
                                      const trace_sink& trace = {});

// Replace F by its chords over the component spans; F elsewhere.
piecewise_cubic assemble_majorant(const piecewise_cubic& pw,
                                  const std::vector<interval>& components);

level_function level_of(const piecewise_cubic& majorant);

}  // namespace lcmaj
