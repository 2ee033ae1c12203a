#include "lcmaj/bridge.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "lcmaj/errors.hpp"
#include "lcmaj/tolerances.hpp"

namespace lcmaj {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double window_magnitude(const interval& w) {
    return std::max({1.0, std::fabs(w.lo), std::fabs(w.hi)});
}

// Tangencies may sit anywhere on the source piece up to the member's
// truncation point, including the piece's convex stretch left of the cell.
interval inversion_window(const concave_member& m) { return {m.piece.span.lo, m.span.hi}; }

bool effectively_quadratic(const concave_member& m) {
    const auto& tols = default_tolerances();
    const interval w = inversion_window(m);
    const double mag = window_magnitude(w);
    const double cubic_term = std::fabs(m.piece.coeffs[0]) * mag * mag * mag;
    return cubic_term <= tols.linear_coeff(coeff_scale(m.piece.as_poly(), w));
}

// Rational part of P(t) - y t at the concave tangency branch; valid only for a
// genuinely cubic piece.
poly rational_intercept(const cubic_piece& p) {
    const double a = p.coeffs[0], b = p.coeffs[1], c = p.coeffs[2], d = p.coeffs[3];
    return poly({d + 2.0 * b * b * b / (27.0 * a * a) - b * c / (3.0 * a), b / (3.0 * a)});
}

// P(t) - y t for a quadratic piece: single tangency branch, no radical.
poly quadratic_intercept(const cubic_piece& p) {
    const double b = p.coeffs[1], c = p.coeffs[2], d = p.coeffs[3];
    return poly({d - c * c / (4.0 * b), c / (2.0 * b), -1.0 / (4.0 * b)});
}

// Solutions t of P'(t) = y, both branches; quadratic pieces have one.
void slope_preimages(const cubic_piece& p, double y, bool quadratic, std::vector<double>& out) {
    out.clear();
    const double a = p.coeffs[0], b = p.coeffs[1], c = p.coeffs[2];
    if (quadratic) {
        if (b != 0.0) out.push_back((y - c) / (2.0 * b));
        return;
    }
    double disc = b * b - 3.0 * a * (c - y);
    const double disc_scale = b * b + std::fabs(3.0 * a * (c - y)) + 1.0;
    if (disc < 0.0) {
        if (disc < -1e-9 * disc_scale) return;
        disc = 0.0;
    }
    const double s = std::sqrt(disc);
    out.push_back((-b - s) / (3.0 * a));
    out.push_back((-b + s) / (3.0 * a));
}

// Newton refinement of the exact tangency conditions: equal slopes at both
// abscissae and a chord of that same slope between them. The eliminated slope
// polynomial can be scaled so badly that its roots arrive with almost no
// precision; iterating on the original conditions restores them, and sloppy
// seeds that converge nowhere useful fall to the window and chord filters.
void polish_tangent_pair(const cubic_piece& lp, const cubic_piece& rp, double& a, double& b) {
    for (int iter = 0; iter < 24; ++iter) {
        const double s1 = lp.slope(a), s2 = rp.slope(b);
        const double dx = b - a;
        const double g1 = s1 - s2;
        const double g2 = rp.value(b) - lp.value(a) - s1 * dx;
        const double slope_scale = 1.0 + std::fabs(s1) + std::fabs(s2);
        const double value_scale =
            1.0 + std::fabs(lp.value(a)) + std::fabs(rp.value(b)) + std::fabs(s1 * dx);
        if (std::fabs(g1) <= 1e-13 * slope_scale && std::fabs(g2) <= 1e-13 * value_scale) {
            return;
        }
        const double k1 = lp.curvature(a), k2 = rp.curvature(b);
        const double det = k1 * (s2 - s1) - k1 * k2 * dx;
        if (det == 0.0) return;
        const double cap = 0.5 * (1.0 + std::fabs(a) + std::fabs(b) + std::fabs(dx));
        const double d1 = std::clamp(-((s2 - s1) * g1 + k2 * g2) / det, -cap, cap);
        const double d2 = std::clamp(-(k1 * dx * g1 + k1 * g2) / det, -cap, cap);
        if (!std::isfinite(d1) || !std::isfinite(d2)) return;
        a += d1;
        b += d2;
    }
}

// Newton refinement of a single tangency: the tangent line of the piece at t
// must pass through the fixed anchor point.
void polish_tangent_point(const cubic_piece& p, double x0, double f0, double& t) {
    for (int iter = 0; iter < 24; ++iter) {
        const double reach = p.slope(t) * (x0 - t);
        const double g = p.value(t) + reach - f0;
        const double value_scale = 1.0 + std::fabs(p.value(t)) + std::fabs(reach) + std::fabs(f0);
        if (std::fabs(g) <= 1e-13 * value_scale) return;
        const double dg = p.curvature(t) * (x0 - t);
        if (dg == 0.0) return;
        const double cap = 0.5 * (1.0 + std::fabs(t) + std::fabs(x0 - t));
        const double step = std::clamp(-g / dg, -cap, cap);
        if (!std::isfinite(step)) return;
        t += step;
    }
}

}  // namespace

interval slope_range(const concave_member& m) {
    const double at_hi = m.piece.slope(m.span.hi);
    const double at_lo = m.piece.slope(m.span.lo);
    return {std::min(at_hi, at_lo), std::max(at_hi, at_lo)};
}

tangency_system build_tangency_system(const concave_member& left, const concave_member& right) {
    tangency_system sys;
    const interval jl = slope_range(left), jr = slope_range(right);
    double lo = std::max(jl.lo, jr.lo), hi = std::min(jl.hi, jr.hi);
    const double pad = 1e-9 * (1.0 + std::max(std::fabs(lo), std::fabs(hi)));
    lo -= pad;
    hi += pad;
    if (hi < lo) {
        sys.empty = true;
        return sys;
    }
    sys.admissible = {lo, hi};
    sys.left_quadratic = effectively_quadratic(left);
    sys.right_quadratic = effectively_quadratic(right);

    const double a = left.piece.coeffs[0], b = left.piece.coeffs[1], c = left.piece.coeffs[2];
    const double w = right.piece.coeffs[0], x = right.piece.coeffs[1], y = right.piece.coeffs[2];

    sys.gamma = poly({b * b - 3.0 * a * c, 3.0 * a});
    sys.delta = poly({x * x - 3.0 * w * y, 3.0 * w});

    if (!sys.left_quadratic && !sys.right_quadratic) {
        sys.mu1 = rational_intercept(right.piece) - rational_intercept(left.piece);
        sys.mu2 = sys.gamma.scaled(-2.0 / (27.0 * a * a));
        sys.mu3 = sys.delta.scaled(2.0 / (27.0 * w * w));
        const poly inner =
            sys.mu1 * sys.mu1 - sys.mu2 * sys.mu2 * sys.gamma - sys.mu3 * sys.mu3 * sys.delta;
        sys.equation =
            inner * inner - (sys.mu2 * sys.mu2 * sys.mu3 * sys.mu3 * sys.gamma * sys.delta).scaled(4.0);
    } else if (sys.left_quadratic && sys.right_quadratic) {
        sys.equation = quadratic_intercept(left.piece) - quadratic_intercept(right.piece);
    } else if (sys.left_quadratic) {
        const poly q = quadratic_intercept(left.piece) - rational_intercept(right.piece);
        sys.equation =
            q * q - (sys.delta * sys.delta * sys.delta).scaled(4.0 / (729.0 * w * w * w * w));
    } else {
        const poly q = quadratic_intercept(right.piece) - rational_intercept(left.piece);
        sys.equation =
            q * q - (sys.gamma * sys.gamma * sys.gamma).scaled(4.0 / (729.0 * a * a * a * a));
    }
    return sys;
}

std::vector<bridge_candidate> candidate_bridges(const concave_member& left,
                                                const concave_member& right,
                                                const trace_sink& trace) {
    std::vector<bridge_candidate> out;
    const tangency_system sys = build_tangency_system(left, right);
    if (sys.empty) return out;

    const auto& tols = default_tolerances();
    const interval wl = inversion_window(left), wr = inversion_window(right);
    std::vector<double> as, bs;
    for (double y : real_roots_in(sys.equation, sys.admissible)) {
        slope_preimages(left.piece, y, sys.left_quadratic, as);
        slope_preimages(right.piece, y, sys.right_quadratic, bs);
        for (double seed_a : as) {
            for (double seed_b : bs) {
                double a = seed_a, b = seed_b;
                polish_tangent_pair(left.piece, right.piece, a, b);
                if (!(b > a)) continue;
                if (a < wl.lo - tols.point_merge(a) || a > wl.hi + tols.point_merge(a)) continue;
                if (b < wr.lo - tols.point_merge(b) || b > wr.hi + tols.point_merge(b)) continue;
                const double slope = left.piece.slope(a);
                const double fa = left.piece.value(a), fb = right.piece.value(b);
                const double chord = (fb - fa) / (b - a);
                if (std::fabs(chord - slope) > tols.tangency(slope, b - a)) continue;
                bool dup = false;
                for (const bridge_candidate& c : out) {
                    if (std::fabs(c.span.lo - a) <= tols.point_merge(a) &&
                        std::fabs(c.span.hi - b) <= tols.point_merge(b)) {
                        dup = true;
                        break;
                    }
                }
                if (!dup) out.push_back({{a, b}, slope, false, false});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const bridge_candidate& p, const bridge_candidate& q) {
        return p.span.lo < q.span.lo;
    });
    if (trace) {
        for (const bridge_candidate& c : out) {
            trace("{\"event\":\"candidate\",\"span\":[" + num(c.span.lo) + "," + num(c.span.hi) +
                  "],\"slope\":" + num(c.slope) + "}");
        }
    }
    return out;
}

std::vector<double> tangency_abscissae(double x0, double f0, const concave_member& m,
                                       anchor_side fixed_on) {
    const double a3 = m.piece.coeffs[0], a2 = m.piece.coeffs[1];
    const double a1 = m.piece.coeffs[2], a0 = m.piece.coeffs[3];
    // Tangent line of the piece at t passes through (x0, f0).
    const poly g({-(a1 * x0 + a0 - f0), -2.0 * a2 * x0, a2 - 3.0 * a3 * x0, 2.0 * a3});
    const interval w = inversion_window(m);
    const auto& tols = default_tolerances();

    std::vector<double> seeds = real_roots_in(g, w);
    // An anchor lying on the member's own polynomial plants a double root at
    // the anchor itself, starving the residual near any close-by tangency; the
    // remaining root follows from the coefficient sum instead.
    if (a3 != 0.0 && std::fabs(m.piece.value(x0) - f0) <= tols.continuity(f0)) {
        seeds.push_back(-(a2 - 3.0 * a3 * x0) / (2.0 * a3) - 2.0 * x0);
    }

    const double sep = std::max(tols.point_merge(x0), 1e-9 * (1.0 + w.length()));
    std::vector<double> out;
    for (double seed : seeds) {
        double t = seed;
        polish_tangent_point(m.piece, x0, f0, t);
        if (t < w.lo - tols.point_merge(t) || t > w.hi + tols.point_merge(t)) continue;
        const bool on_far_side = fixed_on == anchor_side::left ? t > x0 + sep : t < x0 - sep;
        if (!on_far_side) continue;
        bool dup = false;
        for (double u : out) {
            if (std::fabs(u - t) <= tols.point_merge(t)) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(t);
    }
    return out;
}

bool verify_bridge(const piecewise_cubic& pw, const refined_partition& rp,
                   const bridge_candidate& cand, double gap_tol, const trace_sink& trace) {
    const auto& tols = default_tolerances();
    const double alpha = cand.span.lo, beta = cand.span.hi;
    const double span = beta - alpha;
    auto fail = [&](const char* reason, double x) {
        if (trace) {
            trace(std::string("{\"event\":\"verify\",\"span\":[") + num(alpha) + "," + num(beta) +
                  "],\"ok\":false,\"reason\":\"" + reason + "\",\"x\":" + num(x) + "}");
        }
        return false;
    };
    if (!(span > 0.0)) return fail("degenerate", alpha);

    const double fa = pw(alpha), fb = pw(beta);
    const double slope = (fb - fa) / span;
    if (std::fabs(slope - cand.slope) > tols.tangency(cand.slope, span)) {
        return fail("chord_slope", alpha);
    }
    if (!cand.left_is_boundary &&
        std::fabs(pw.slope(alpha) - slope) > tols.tangency(slope, span)) {
        return fail("left_tangency", alpha);
    }
    if (!cand.right_is_boundary &&
        std::fabs(pw.slope(beta) - slope) > tols.tangency(slope, span)) {
        return fail("right_tangency", beta);
    }

    const double guard = 1e-7 * (1.0 + span);
    std::vector<double> checks;
    auto push = [&](double x) {
        if (x > alpha + guard && x < beta - guard) checks.push_back(x);
    };
    for (const cell& c : rp.cells) {
        const double lo = std::max(c.span.lo, alpha), hi = std::min(c.span.hi, beta);
        if (!(hi > lo)) continue;
        push(c.span.lo);
        push(c.span.hi);
        if (hi - lo > 10.0 * guard) push(0.5 * (lo + hi));
        if (c.curv == curvature_class::strictly_concave) {
            // Interior extrema of chord - F sit where F' matches the slope.
            const poly eq = c.piece.slope_poly() - poly::constant(slope);
            for (double r : real_roots_in(eq, {lo, hi})) push(r);
        }
    }
    for (int i = 1; i <= 9; ++i) push(alpha + span * (0.1 * i));

    for (double x : checks) {
        const double line = fa + slope * (x - alpha);
        if (line - pw(x) <= gap_tol) return fail("chord_touches", x);
    }
    if (trace) {
        trace(std::string("{\"event\":\"verify\",\"span\":[") + num(alpha) + "," + num(beta) +
              "],\"ok\":true}");
    }
    return true;
}

bool prune_pair(const piecewise_cubic& pw, const refined_partition& rp,
                const concave_member& left, const concave_member& right, interval working,
                const trace_sink& trace) {
    const auto& tols = default_tolerances();
    auto note = [&](const char* reason) {
        if (trace) {
            trace(std::string("{\"event\":\"prune\",\"left\":[") + num(left.span.lo) + "," +
                  num(left.span.hi) + "],\"right\":[" + num(right.span.lo) + "," +
                  num(right.span.hi) + "],\"reason\":\"" + reason + "\"}");
        }
        return true;
    };
    if (left.group_id >= 0 && left.group_id == right.group_id) return note("same_concave_run");
    if (right.span.lo - working.lo <= tols.point_merge(working.lo)) return false;
    const double s = rightmost_max_location(pw, rp, {working.lo, right.span.lo});
    if (s >= right.span.lo - tols.point_merge(s)) return false;
    if (left.span.lo > s + tols.point_merge(s)) return note("beyond_last_max");
    return false;
}

}  // namespace lcmaj
