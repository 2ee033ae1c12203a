#include "lcmaj/spline.hpp"

#include <algorithm>
#include <cmath>

#include "lcmaj/errors.hpp"

namespace lcmaj {

piecewise_cubic clamped_spline(const spline_problem& prob) {
    const std::size_t n = prob.nodes.size();
    if (n < 2) throw input_error("spline: need at least two nodes");
    if (prob.values.size() != n) throw input_error("spline: values must match nodes");
    for (double x : prob.nodes) {
        if (!std::isfinite(x)) throw input_error("spline: non-finite node");
    }
    for (double v : prob.values) {
        if (!std::isfinite(v)) throw input_error("spline: non-finite value");
    }
    if (!std::isfinite(prob.d_left) || !std::isfinite(prob.d_right)) {
        throw input_error("spline: non-finite clamp slope");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(prob.nodes[i] > prob.nodes[i - 1])) {
            throw input_error("spline: nodes must be strictly increasing");
        }
    }

    const std::size_t m = n - 1;  // subintervals
    std::vector<double> h(m), slope(m);
    for (std::size_t k = 0; k < m; ++k) {
        h[k] = prob.nodes[k + 1] - prob.nodes[k];
        slope[k] = (prob.values[k + 1] - prob.values[k]) / h[k];
    }

    // Tridiagonal system for the node second derivatives, clamped both ends.
    std::vector<double> sub(n, 0.0), diag(n, 0.0), sup(n, 0.0), rhs(n, 0.0);
    diag[0] = 2.0 * h[0];
    sup[0] = h[0];
    rhs[0] = 6.0 * (slope[0] - prob.d_left);
    for (std::size_t k = 1; k < m; ++k) {
        sub[k] = h[k - 1];
        diag[k] = 2.0 * (h[k - 1] + h[k]);
        sup[k] = h[k];
        rhs[k] = 6.0 * (slope[k] - slope[k - 1]);
    }
    sub[m] = h[m - 1];
    diag[m] = 2.0 * h[m - 1];
    rhs[m] = 6.0 * (prob.d_right - slope[m - 1]);

    for (std::size_t k = 1; k < n; ++k) {
        const double w = sub[k] / diag[k - 1];
        diag[k] -= w * sup[k - 1];
        rhs[k] -= w * rhs[k - 1];
    }
    std::vector<double> moments(n);
    moments[n - 1] = rhs[n - 1] / diag[n - 1];
    for (std::size_t k = n - 1; k-- > 0;) {
        moments[k] = (rhs[k] - sup[k] * moments[k + 1]) / diag[k];
    }

    std::vector<double> node_slope(n);
    node_slope[0] = prob.d_left;
    node_slope[n - 1] = prob.d_right;
    for (std::size_t k = 1; k < m; ++k) {
        node_slope[k] = slope[k] - h[k] * (2.0 * moments[k] + moments[k + 1]) / 6.0;
    }

    std::vector<std::array<double, 4>> rows;
    rows.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        rows.push_back(hermite_piece(prob.nodes[k], prob.nodes[k + 1], prob.values[k],
                                     node_slope[k], prob.values[k + 1], node_slope[k + 1])
                           .coeffs);
    }
    return piecewise_cubic::from_knots_coeffs(prob.nodes, std::move(rows));
}

mesh_plan mesh_for_tolerance(double eps, double fourth_deriv_bound, double length) {
    if (!(eps > 0.0)) throw input_error("spline: tolerance must be positive");
    if (!(fourth_deriv_bound > 0.0)) throw input_error("spline: derivative bound must be positive");
    if (!(length > 0.0)) throw input_error("spline: length must be positive");
    mesh_plan plan;
    plan.norm_h = std::cbrt(24.0 * eps / fourth_deriv_bound);
    plan.count = static_cast<std::size_t>(std::floor(length / plan.norm_h)) + 1;
    return plan;
}

double error_certificate::majorant_bound_at(double x) const {
    const double from_ends = std::min(x - domain.lo, domain.hi - x);
    return std::max(from_ends, 0.0) * deriv_bound;
}

error_certificate certify(interval domain, double mesh_norm, double fourth_deriv_bound) {
    if (!(mesh_norm > 0.0)) throw input_error("spline: mesh norm must be positive");
    // Zero is allowed: an exact-cubic source certifies with all bounds zero.
    if (!(fourth_deriv_bound >= 0.0)) {
        throw input_error("spline: derivative bound must be non-negative");
    }
    error_certificate cert;
    cert.domain = domain;
    cert.mesh_norm = mesh_norm;
    cert.fourth_deriv_bound = fourth_deriv_bound;
    cert.deriv_bound = fourth_deriv_bound * mesh_norm * mesh_norm * mesh_norm / 24.0;
    cert.sup_majorant_bound = 0.5 * domain.length() * cert.deriv_bound;
    cert.level_bound = cert.deriv_bound;
    return cert;
}

}  // namespace lcmaj
