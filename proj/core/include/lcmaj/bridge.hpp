#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lcmaj/partition.hpp"
#include "lcmaj/poly.hpp"

namespace lcmaj {

// Receives one JSON line per march event when tracing is enabled.
using trace_sink = std::function<void(const std::string&)>;

// Proposed maximal bridge: the chord over span has the given slope and is
// tangent at each end that is not a domain boundary.
struct bridge_candidate {
    interval span;
    double slope = 0.0;
    bool left_is_boundary = false;
    bool right_is_boundary = false;
};

// Which side of the tangency the fixed (domain-boundary) point sits on.
enum class anchor_side { left, right };

// Polynomial system in the common tangent slope y for a pair of concave
// members. equation is degree 6 when both sides are genuinely cubic, degree 4
// when one side is quadratic, degree 2 when both are.
struct tangency_system {
    poly gamma, delta;       // discriminant arguments, linear in y
    poly mu1, mu2, mu3;      // radical-elimination multipliers
    poly equation;
    interval admissible;     // slope window J, already intersected and padded
    bool left_quadratic = false;
    bool right_quadratic = false;
    bool empty = false;      // J is empty, no candidates possible
};

// Slopes attained on the member: [slope at hi, slope at lo] (slope decreases
// on a concave cell).
interval slope_range(const concave_member& m);

tangency_system build_tangency_system(const concave_member& left, const concave_member& right);

// All chord-consistent common-tangent pairs (a, b), a near left, b near right.
// Tangency abscissae may leave the concave cell as long as they stay on the
// source piece left of the cell's truncation point.
std::vector<bridge_candidate> candidate_bridges(const concave_member& left,
                                                const concave_member& right,
                                                const trace_sink& trace = {});

// Abscissae t on member m whose tangent line passes through (x0, f0), on the
// opposite side of x0 from the anchor.
std::vector<double> tangency_abscissae(double x0, double f0, const concave_member& m,
                                       anchor_side fixed_on);

// Checkpoint test: chord minus F must exceed gap_tol strictly inside the span.
bool verify_bridge(const piecewise_cubic& pw, const refined_partition& rp,
                   const bridge_candidate& cand, double gap_tol, const trace_sink& trace = {});

// True when the pair (left, right) cannot carry a bridge: same concave run, or
// left lies beyond the rightmost maximizer of F on [working.lo, right.lo].
bool prune_pair(const piecewise_cubic& pw, const refined_partition& rp,
                const concave_member& left, const concave_member& right, interval working,
                const trace_sink& trace = {});

}  // namespace lcmaj
