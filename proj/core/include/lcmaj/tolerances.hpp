#pragma once

#include <cmath>
#include <cstdlib>

namespace lcmaj {

// Every tolerance is relative: a unit scale plus a magnitude proportional to the
// local quantity, so results are stable under affine rescaling of the problem.
// LCM_TOL_SCALE multiplies all of them (default 1).
struct tolerances {
    double scale = 1.0;

    // Junction value/slope mismatch allowed when validating piecewise input.
    double continuity(double local) const { return scale * 1e-7 * (1.0 + std::fabs(local)); }
    // Membership of a cell maximum in the global maximum set.
    double max_membership(double m) const { return scale * 1e-9 * (1.0 + std::fabs(m)); }
    // Target accuracy for polished polynomial roots.
    double root_target(double x) const { return scale * 1e-12 * (1.0 + std::fabs(x)); }
    // Chord-slope residual accepted when pairing tangency abscissae.
    double tangency(double slope, double span) const {
        return scale * 1e-8 * (1.0 + std::fabs(slope)) * (1.0 + std::fabs(span));
    }
    // Strict positivity margin required of chord - F at verification checkpoints.
    double chord_gap(double m) const { return scale * 1e-10 * (1.0 + std::fabs(m)); }
    // Leading-coefficient threshold below which a polynomial term is degenerate.
    double linear_coeff(double coeff_scale) const { return scale * 1e-12 * coeff_scale; }
    // Distance under which two partition points collapse into one.
    double point_merge(double x) const { return scale * 1e-9 * (1.0 + std::fabs(x)); }
};

inline const tolerances& default_tolerances() {
    static const tolerances tols = [] {
        tolerances t;
        if (const char* env = std::getenv("LCM_TOL_SCALE")) {
            char* end = nullptr;
            double v = std::strtod(env, &end);
            if (end != env && v > 0.0 && std::isfinite(v)) t.scale = v;
        }
        return t;
    }();
    return tols;
}

}  // namespace lcmaj
