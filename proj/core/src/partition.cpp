#include "lcmaj/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lcmaj/errors.hpp"
#include "lcmaj/tolerances.hpp"

namespace lcmaj {

namespace {

void append_point(std::vector<double>& points, double x) {
    const auto& tols = default_tolerances();
    for (double p : points) {
        if (std::fabs(p - x) <= tols.point_merge(x)) return;
    }
    points.push_back(x);
}

// Candidate abscissae for the extreme values of a piece on a window: the
// window ends plus interior critical points.
std::vector<double> extreme_candidates(const cubic_piece& piece, const interval& window) {
    std::vector<double> xs{window.lo, window.hi};
    for (double r : real_roots_in(piece.slope_poly(), window)) append_point(xs, r);
    return xs;
}

monotonicity classify_monotonicity(const cell& c) {
    const auto& tols = default_tolerances();
    const poly sp = c.piece.slope_poly();
    const double s = c.piece.slope(c.span.mid());
    if (std::fabs(s) <= tols.linear_coeff(coeff_scale(sp, c.span))) return monotonicity::constant;
    return s > 0.0 ? monotonicity::increasing : monotonicity::decreasing;
}

curvature_class classify_curvature(const cell& c) {
    const auto& tols = default_tolerances();
    const poly cp = c.piece.curvature_poly();
    const double k = c.piece.curvature(c.span.mid());
    if (std::fabs(k) <= tols.linear_coeff(coeff_scale(cp, c.span))) return curvature_class::linear;
    return k < 0.0 ? curvature_class::strictly_concave : curvature_class::strictly_convex;
}

}  // namespace

max_structure global_max(const piecewise_cubic& pw) {
    const auto& tols = default_tolerances();

    double m = -std::numeric_limits<double>::infinity();
    for (const cubic_piece& piece : pw.pieces()) {
        for (double x : extreme_candidates(piece, piece.span)) m = std::max(m, piece.value(x));
    }

    // Interval maximizers only occur on constant pieces at level m; everything
    // else contributes isolated points.
    std::vector<interval> hits;
    const double tol = tols.max_membership(m);
    for (const cubic_piece& piece : pw.pieces()) {
        if (coeff_scale(piece.slope_poly(), piece.span) == 0.0) {
            if (std::fabs(piece.value(piece.span.mid()) - m) <= tol) hits.push_back(piece.span);
            continue;
        }
        for (double x : extreme_candidates(piece, piece.span)) {
            if (std::fabs(piece.value(x) - m) <= tol) hits.push_back({x, x});
        }
    }
    if (hits.empty()) throw contract_error("partition: maximum location lost");

    std::sort(hits.begin(), hits.end(),
              [](const interval& a, const interval& b) { return a.lo < b.lo; });
    std::vector<interval> merged;
    for (const interval& h : hits) {
        if (!merged.empty() && h.lo <= merged.back().hi + tols.point_merge(h.lo)) {
            merged.back().hi = std::max(merged.back().hi, h.hi);
        } else {
            merged.push_back(h);
        }
    }

    max_structure out;
    out.max_value = m;
    out.maximizers = std::move(merged);
    out.plateau_hull = {out.maximizers.front().lo, out.maximizers.back().hi};
    return out;
}

refined_partition refine(const piecewise_cubic& pw, interval working) {
    if (!(working.hi > working.lo)) throw contract_error("partition: empty working interval");
    const interval dom = pw.domain();
    if (working.lo < dom.lo - 1e-9 * (1.0 + std::fabs(dom.lo)) ||
        working.hi > dom.hi + 1e-9 * (1.0 + std::fabs(dom.hi))) {
        throw contract_error("partition: working interval leaves the domain");
    }

    std::vector<double> points{working.lo, working.hi};
    for (std::size_t i = 0; i < pw.pieces().size(); ++i) {
        const cubic_piece& piece = pw.pieces()[i];
        const double lo = std::max(piece.span.lo, working.lo);
        const double hi = std::min(piece.span.hi, working.hi);
        if (!(hi > lo)) continue;
        append_point(points, lo);
        append_point(points, hi);
        const interval window{lo, hi};
        for (double r : real_roots_in(piece.slope_poly(), window)) append_point(points, r);
        for (double r : real_roots_in(piece.curvature_poly(), window)) append_point(points, r);
    }
    std::sort(points.begin(), points.end());
    points.front() = working.lo;
    points.back() = working.hi;

    refined_partition rp;
    rp.working = working;
    const auto& tols = default_tolerances();
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const double u = points[i], v = points[i + 1];
        if (v - u <= tols.point_merge(u)) continue;
        cell c;
        c.span = {u, v};
        c.piece_index = pw.piece_index(c.span.mid());
        c.piece = pw.pieces()[c.piece_index];
        c.mono = classify_monotonicity(c);
        c.curv = classify_curvature(c);
        rp.cells.push_back(c);
    }

    int next_group = 0;
    bool in_run = false;
    for (cell& c : rp.cells) {
        if (c.curv == curvature_class::strictly_concave) {
            if (!in_run) {
                in_run = true;
                ++next_group;
            }
            c.group_id = next_group - 1;
        } else {
            in_run = false;
            c.group_id = -1;
        }
    }
    return rp;
}

std::vector<concave_member> concave_increasing_members(const refined_partition& rp) {
    const auto& tols = default_tolerances();
    std::vector<concave_member> members;
    for (const cell& c : rp.cells) {
        if (c.curv != curvature_class::strictly_concave || c.mono != monotonicity::increasing) {
            continue;
        }
        if (!members.empty() && members.back().piece_index == c.piece_index &&
            std::fabs(members.back().span.hi - c.span.lo) <= tols.point_merge(c.span.lo)) {
            members.back().span.hi = c.span.hi;
            continue;
        }
        members.push_back({c.span, c.piece_index, c.piece, c.group_id});
    }
    return members;
}

double rightmost_max_location(const piecewise_cubic& pw, const refined_partition& rp,
                              interval range, double* max_value) {
    const auto& tols = default_tolerances();
    // Seed with a real value: the membership tolerance is relative, so an
    // infinite sentinel would swallow every later comparison.
    double best = pw(range.lo);
    double where = range.lo;
    for (const cell& c : rp.cells) {
        const double lo = std::max(c.span.lo, range.lo);
        const double hi = std::min(c.span.hi, range.hi);
        if (!(hi >= lo)) continue;
        for (double x : extreme_candidates(c.piece, {lo, hi})) {
            const double v = c.piece.value(x);
            if (v > best + tols.max_membership(best)) {
                best = v;
                where = x;
            } else if (std::fabs(v - best) <= tols.max_membership(best) && x > where) {
                where = x;
            }
        }
    }
    if (max_value != nullptr) *max_value = best;
    return where;
}

}  // namespace lcmaj
