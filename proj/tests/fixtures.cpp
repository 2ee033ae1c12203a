#include "fixtures.hpp"

#include <cmath>
#include <random>

namespace lcmaj::testing {

piecewise_cubic demo_function() {
    std::vector<double> knots{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<std::array<double, 4>> coeffs{
        {-1.1, 1.1, 1.0, 1.0},      // rises to 2, local max at 0.97687
        {1.3, -5.3, 6.6, -0.6},     // dip to 1.8 then recovery
        {-0.9, 6.0, -12.2, 9.4},    // local max at 2.87011
        {-1.5, 16.0, -56.0, 67.0},  // climbs to the plateau level
        {0.0, 0.0, 0.0, 3.0},       // plateau at the maximum
        {0.5, -8.75, 50.0, -90.75},
        {0.0, 1.0, -13.0, 44.25},   // quadratic valley at 2
        {-0.5, 10.75, -76.0, 179.0},
        {1.0, -25.5, 216.0, -605.0},
        {0.6, -16.6, 153.0, -467.3},
    };
    return piecewise_cubic::from_knots_coeffs(std::move(knots), std::move(coeffs));
}

piecewise_cubic boundary_peak_function() {
    std::vector<std::array<double, 4>> coeffs{
        hermite_piece(0.0, 1.0, 1.0, 6.0, 5.0, 0.0).coeffs,
        hermite_piece(1.0, 2.0, 5.0, 0.0, 1.0, 0.0).coeffs,
        hermite_piece(2.0, 3.0, 1.0, 0.0, 2.5, 0.5).coeffs,
        hermite_piece(3.0, 4.0, 2.5, 0.5, 6.0, 1.0).coeffs,
    };
    return piecewise_cubic::from_knots_coeffs({0.0, 1.0, 2.0, 3.0, 4.0}, std::move(coeffs));
}

namespace {

double phi(double t) { return 0.3989422804014327 * std::exp(-0.5 * t * t); }

double phi_cdf(double t) { return 0.5 * std::erfc(-t / 1.4142135623730951); }

}  // namespace

double trimodal_density(double x) {
    return 0.5 * phi(x - 3.0) + 3.0 * phi(10.0 * (x - 3.8)) + 2.0 * phi(10.0 * (x - 4.2));
}

double trimodal_cdf(double x) {
    // int_0^x of each bump: scale/width times the difference of normal CDFs.
    return 0.5 * (phi_cdf(x - 3.0) - phi_cdf(-3.0)) +
           0.3 * (phi_cdf(10.0 * (x - 3.8)) - phi_cdf(-38.0)) +
           0.2 * (phi_cdf(10.0 * (x - 4.2)) - phi_cdf(-42.0));
}

spline_problem trimodal_spline_problem(std::size_t subintervals) {
    spline_problem prob;
    const double h = 6.0 / static_cast<double>(subintervals);
    for (std::size_t i = 0; i <= subintervals; ++i) {
        const double x = (i == subintervals) ? 6.0 : h * static_cast<double>(i);
        prob.nodes.push_back(x);
        prob.values.push_back(trimodal_cdf(x));
    }
    prob.d_left = trimodal_density(0.0);
    prob.d_right = trimodal_density(6.0);
    return prob;
}

piecewise_cubic random_piecewise(std::uint64_t seed, std::size_t max_pieces) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> piece_count(1, max_pieces);
    std::uniform_real_distribution<double> gap(0.4, 2.0);
    std::uniform_real_distribution<double> value(-4.0, 4.0);
    std::uniform_real_distribution<double> slope(-6.0, 6.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const std::size_t n = piece_count(rng);
    std::vector<double> knots{std::round(100.0 * value(rng)) / 100.0};
    for (std::size_t i = 0; i < n; ++i) knots.push_back(knots.back() + gap(rng));

    std::vector<double> vals(n + 1), slopes(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        vals[i] = value(rng);
        slopes[i] = slope(rng);
    }

    // Kind adjustments first so shared node data stays consistent; pieces are
    // built only from the final Hermite data, which keeps the result C1.
    for (std::size_t i = 0; i < n; ++i) {
        const double kind = unit(rng);
        if (kind < 0.10) {
            // constant stretch
            vals[i + 1] = vals[i];
            slopes[i] = slopes[i + 1] = 0.0;
        } else if (kind < 0.25) {
            // straight line
            slopes[i] = slopes[i + 1] = (vals[i + 1] - vals[i]) / (knots[i + 1] - knots[i]);
        }
    }
    std::vector<std::array<double, 4>> coeffs;
    for (std::size_t i = 0; i < n; ++i) {
        coeffs.push_back(hermite_piece(knots[i], knots[i + 1], vals[i], slopes[i], vals[i + 1],
                                       slopes[i + 1])
                             .coeffs);
    }
    return piecewise_cubic::from_knots_coeffs(std::move(knots), std::move(coeffs));
}

}  // namespace lcmaj::testing
