#include "lcmaj/hull.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "lcmaj/errors.hpp"
#include "lcmaj/tolerances.hpp"

namespace lcmaj {

grid_hull grid_upper_hull(std::vector<double> xs, std::vector<double> ys) {
    if (xs.size() < 2) throw input_error("hull: need at least two points");
    if (xs.size() != ys.size()) throw input_error("hull: xs and ys must match");
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (!(xs[i] > xs[i - 1])) throw input_error("hull: xs must be strictly increasing");
    }
    const std::size_t grid_n = xs.size();
    grid_hull out;
    out.xs = std::move(xs);
    out.ys = std::move(ys);

    // Monotone chain, keeping only clockwise turns for the upper hull.
    auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
        return (out.xs[a] - out.xs[o]) * (out.ys[b] - out.ys[o]) -
               (out.ys[a] - out.ys[o]) * (out.xs[b] - out.xs[o]);
    };
    std::vector<std::size_t>& hull = out.hull_vertices;
    for (std::size_t i = 0; i < grid_n; ++i) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), i) >= 0.0) {
            hull.pop_back();
        }
        hull.push_back(i);
    }

    out.hull_ys.resize(grid_n);
    std::size_t seg = 0;
    for (std::size_t i = 0; i < grid_n; ++i) {
        while (seg + 1 < hull.size() && out.xs[hull[seg + 1]] < out.xs[i]) ++seg;
        if (seg + 1 >= hull.size()) {
            out.hull_ys[i] = out.ys[hull.back()];
            continue;
        }
        const std::size_t u = hull[seg], v = hull[seg + 1];
        const double t = (out.xs[i] - out.xs[u]) / (out.xs[v] - out.xs[u]);
        out.hull_ys[i] = out.ys[u] + t * (out.ys[v] - out.ys[u]);
    }
    return out;
}

grid_hull grid_upper_hull(const piecewise_cubic& pw, std::size_t grid_n, unsigned threads) {
    if (grid_n < 2) throw input_error("hull: grid needs at least two points");
    const interval dom = pw.domain();
    std::vector<double> xs(grid_n), ys(grid_n);
    const double step = dom.length() / static_cast<double>(grid_n - 1);
    for (std::size_t i = 0; i < grid_n; ++i) {
        xs[i] = (i + 1 == grid_n) ? dom.hi : dom.lo + step * static_cast<double>(i);
    }

    auto eval_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) ys[i] = pw(xs[i]);
    };
    if (threads <= 1 || grid_n < 4096) {
        eval_range(0, grid_n);
    } else {
        const unsigned workers =
            std::min<unsigned>(threads, std::max(1u, std::thread::hardware_concurrency()));
        std::vector<std::thread> pool;
        const std::size_t chunk = (grid_n + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(grid_n, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(eval_range, lo, hi);
        }
        for (std::thread& t : pool) t.join();
    }
    return grid_upper_hull(std::move(xs), std::move(ys));
}

hull_comparison compare_with_hull(const piecewise_cubic& pw, const majorant_result& result,
                                  std::size_t grid_n, unsigned threads) {
    const grid_hull gh = grid_upper_hull(pw, grid_n, threads);
    const auto& tols = default_tolerances();

    hull_comparison cmp;
    for (std::size_t i = 0; i < gh.xs.size(); ++i) {
        cmp.sup_diff = std::max(cmp.sup_diff, std::fabs(result.majorant(gh.xs[i]) - gh.hull_ys[i]));
    }

    // Components appear on the grid as runs where the hull sits clearly above F.
    const double gap = 1e-9 * (1.0 + std::fabs(result.max_info.max_value));
    bool in_run = false;
    std::size_t run_start = 0;
    for (std::size_t i = 0; i < gh.xs.size(); ++i) {
        const bool open = gh.hull_ys[i] - gh.ys[i] > gap;
        if (open && !in_run) {
            in_run = true;
            run_start = i;
        } else if (!open && in_run) {
            in_run = false;
            cmp.oracle_components.push_back(
                {gh.xs[run_start == 0 ? 0 : run_start - 1], gh.xs[i]});
        }
    }
    if (in_run) cmp.oracle_components.push_back({gh.xs[run_start == 0 ? 0 : run_start - 1], gh.xs.back()});

    cmp.exact_count = result.components.size();
    cmp.oracle_count = cmp.oracle_components.size();
    const double cell = gh.xs.size() > 1 ? gh.xs[1] - gh.xs[0] : 0.0;
    if (cmp.exact_count == cmp.oracle_count) {
        cmp.components_matched = true;
        for (std::size_t i = 0; i < cmp.exact_count; ++i) {
            const double dlo = std::fabs(cmp.oracle_components[i].lo - result.components[i].lo);
            const double dhi = std::fabs(cmp.oracle_components[i].hi - result.components[i].hi);
            cmp.endpoint_mismatch = std::max({cmp.endpoint_mismatch, dlo, dhi});
            if (dlo > 2.0 * cell + tols.point_merge(result.components[i].lo) ||
                dhi > 2.0 * cell + tols.point_merge(result.components[i].hi)) {
                cmp.components_matched = false;
            }
        }
    }
    return cmp;
}

}  // namespace lcmaj
