#include "lcmaj/majorant.hpp"

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

void emit_span(const trace_sink& trace, const char* event, interval span) {
    if (trace) {
        trace(std::string("{\"event\":\"") + event + "\",\"span\":[" + num(span.lo) + "," +
              num(span.hi) + "]}");
    }
}

// Drop everything at or right of w1; the member holding w1 keeps its left part.
void truncate_members(std::vector<concave_member>& members, double w1) {
    const auto& tols = default_tolerances();
    std::vector<concave_member> kept;
    for (const concave_member& m : members) {
        if (m.span.hi <= w1 + tols.point_merge(w1)) {
            kept.push_back(m);
            continue;
        }
        if (m.span.lo >= w1 - tols.point_merge(w1)) continue;
        concave_member t = m;
        t.span.hi = w1;
        if (t.span.length() > tols.point_merge(w1)) kept.push_back(t);
    }
    members = std::move(kept);
}

}  // namespace

double level_function::operator()(double x) const {
    auto it = std::lower_bound(knots.begin() + 1, knots.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - (knots.begin() + 1));
    idx = std::min(idx, pieces.size() - 1);
    return pieces[idx].value(x);
}

std::vector<interval> components_left(const piecewise_cubic& pw, interval working,
                                      bool anchored_right, double max_value,
                                      const trace_sink& trace) {
    std::vector<interval> out;
    const auto& tols = default_tolerances();
    if (!(working.length() > tols.point_merge(working.lo))) return out;

    const refined_partition rp = refine(pw, working);
    std::vector<concave_member> members = concave_increasing_members(rp);
    if (trace) {
        std::string line = "{\"event\":\"march\",\"working\":[" + num(working.lo) + "," +
                           num(working.hi) + "],\"members\":[";
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i > 0) line += ",";
            line += "[" + num(members[i].span.lo) + "," + num(members[i].span.hi) + "]";
        }
        trace(line + "]}");
    }
    const double gap_tol = tols.chord_gap(max_value);

    if (anchored_right) {
        const double b = working.hi, fb = pw(b);
        const bridge_candidate whole{working, (fb - pw(working.lo)) / working.length(), true, true};
        if (verify_bridge(pw, rp, whole, gap_tol, trace)) {
            emit_span(trace, "accept", whole.span);
            out.push_back(whole.span);
            return out;
        }
        bool found = false;
        for (const concave_member& m : members) {
            std::vector<double> taus = tangency_abscissae(b, fb, m, anchor_side::right);
            std::sort(taus.begin(), taus.end());
            for (double t : taus) {
                const bridge_candidate cand{{t, b}, (fb - m.piece.value(t)) / (b - t), false, true};
                if (verify_bridge(pw, rp, cand, gap_tol, trace)) {
                    emit_span(trace, "accept", cand.span);
                    out.push_back(cand.span);
                    truncate_members(members, t);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
    }

    while (!members.empty()) {
        const concave_member R = members.back();
        bool accepted = false;

        // A bridge anchored at the left domain end covers everything below it.
        const double a = working.lo, fa = pw(a);
        std::vector<double> taus = tangency_abscissae(a, fa, R, anchor_side::left);
        std::sort(taus.rbegin(), taus.rend());
        for (double t : taus) {
            const bridge_candidate cand{{a, t}, (pw(t) - fa) / (t - a), true, false};
            if (verify_bridge(pw, rp, cand, gap_tol, trace)) {
                emit_span(trace, "accept", cand.span);
                out.push_back(cand.span);
                std::sort(out.begin(), out.end(),
                          [](interval p, interval q) { return p.lo < q.lo; });
                return out;
            }
        }

        for (std::size_t i = 0; i + 1 < members.size() && !accepted; ++i) {
            const concave_member& L = members[i];
            if (prune_pair(pw, rp, L, R, working, trace)) continue;
            const bridge_candidate* best = nullptr;
            std::vector<bridge_candidate> cands = candidate_bridges(L, R, trace);
            for (const bridge_candidate& c : cands) {
                if (!verify_bridge(pw, rp, c, gap_tol, trace)) continue;
                if (best == nullptr) {
                    best = &c;
                    continue;
                }
                const double tie = tols.point_merge(c.span.hi);
                if (c.span.hi > best->span.hi + tie ||
                    (std::fabs(c.span.hi - best->span.hi) <= tie && c.span.lo < best->span.lo)) {
                    best = &c;
                }
            }
            if (best != nullptr) {
                emit_span(trace, "accept", best->span);
                out.push_back(best->span);
                truncate_members(members, best->span.lo);
                accepted = true;
            }
        }

        if (!accepted) {
            emit_span(trace, "pop", R.span);
            members.pop_back();
        }
    }

    std::sort(out.begin(), out.end(), [](interval p, interval q) { return p.lo < q.lo; });
    return out;
}

piecewise_cubic assemble_majorant(const piecewise_cubic& pw,
                                  const std::vector<interval>& components) {
    const auto& tols = default_tolerances();
    std::vector<double> knots = pw.knots();
    auto insert_knot = [&](double x) {
        for (double k : knots) {
            if (std::fabs(k - x) <= tols.point_merge(x)) return;
        }
        knots.push_back(x);
    };
    for (const interval& c : components) {
        insert_knot(c.lo);
        insert_knot(c.hi);
    }
    std::sort(knots.begin(), knots.end());

    std::vector<std::array<double, 4>> rows;
    rows.reserve(knots.size() - 1);
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double mid = 0.5 * (knots[i] + knots[i + 1]);
        const interval* host = nullptr;
        for (const interval& c : components) {
            if (c.lo <= knots[i] + tols.point_merge(knots[i]) &&
                knots[i + 1] <= c.hi + tols.point_merge(knots[i + 1])) {
                host = &c;
                break;
            }
        }
        if (host != nullptr) {
            const double slope = (pw(host->hi) - pw(host->lo)) / host->length();
            rows.push_back({0.0, 0.0, slope, pw(host->lo) - slope * host->lo});
        } else {
            rows.push_back(pw.pieces()[pw.piece_index(mid)].coeffs);
        }
    }
    return piecewise_cubic::from_knots_coeffs(std::move(knots), std::move(rows));
}

level_function level_of(const piecewise_cubic& majorant) {
    level_function out;
    out.knots = majorant.knots();
    out.pieces.reserve(majorant.pieces().size());
    for (const cubic_piece& p : majorant.pieces()) {
        out.pieces.push_back(cubic_piece{
            p.span, {0.0, 3.0 * p.coeffs[0], 2.0 * p.coeffs[1], p.coeffs[2]}});
    }
    return out;
}

majorant_result analyze(const piecewise_cubic& pw, const trace_sink& trace) {
    majorant_result res;
    res.max_info = global_max(pw);
    const interval dom = pw.domain();
    const auto& tols = default_tolerances();
    const double c1 = res.max_info.plateau_hull.lo;
    const double c2 = res.max_info.plateau_hull.hi;
    const double m = res.max_info.max_value;

    std::vector<interval> comps;
    if (c1 - dom.lo > tols.point_merge(dom.lo)) {
        const bool anchored = dom.hi - c1 <= tols.point_merge(dom.hi);
        for (interval iv : components_left(pw, {dom.lo, c1}, anchored, m, trace)) {
            comps.push_back(iv);
        }
    }
    if (c2 - c1 > tols.point_merge(c1)) {
        // Inside the maximizer hull the majorant is the constant m; components
        // are the maximal runs of cells dipping below it.
        const refined_partition prp = refine(pw, {c1, c2});
        bool in_run = false;
        double run_start = c1;
        for (const cell& c : prp.cells) {
            const double lowest =
                std::min({pw(c.span.lo), pw(c.span.mid()), pw(c.span.hi)});
            const bool sub = (m - lowest) > tols.max_membership(m);
            if (sub && !in_run) {
                in_run = true;
                run_start = c.span.lo;
            } else if (!sub && in_run) {
                in_run = false;
                emit_span(trace, "plateau_gap", {run_start, c.span.lo});
                comps.push_back({run_start, c.span.lo});
            }
        }
        if (in_run) {
            emit_span(trace, "plateau_gap", {run_start, c2});
            comps.push_back({run_start, c2});
        }
    }
    if (dom.hi - c2 > tols.point_merge(c2)) {
        const piecewise_cubic g = reflect(pw);
        const bool anchored = c2 - dom.lo <= tols.point_merge(dom.lo);
        for (interval iv : components_left(g, {-dom.hi, -c2}, anchored, m, trace)) {
            comps.push_back({-iv.hi, -iv.lo});
        }
    }
    std::sort(comps.begin(), comps.end(), [](interval p, interval q) { return p.lo < q.lo; });
    res.components = std::move(comps);
    res.majorant = assemble_majorant(pw, res.components);
    res.level = level_of(res.majorant);
    return res;
}

}  // namespace lcmaj
