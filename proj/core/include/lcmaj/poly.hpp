#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace lcmaj {

struct interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

// Dense univariate polynomial, coefficients lowest-degree first.
// Trailing near-zero leading coefficients are kept; degree() reports the
// highest index with a nonzero coefficient.
class poly {
public:
    poly() = default;
    explicit poly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

    static poly constant(double c) { return poly({c}); }

    const std::vector<double>& coeffs() const { return coeffs_; }
    double coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }
    int degree() const;

    double operator()(double x) const;

    poly derivative() const;
    poly operator+(const poly& other) const;
    poly operator-(const poly& other) const;
    poly operator*(const poly& other) const;
    poly scaled(double factor) const;

private:
    std::vector<double> coeffs_;
};

// One cubic piece in global coordinates: s(x) = a3 x^3 + a2 x^2 + a1 x + a0.
struct cubic_piece {
    interval span;
    std::array<double, 4> coeffs{};  // a3, a2, a1, a0

    double value(double x) const {
        return ((coeffs[0] * x + coeffs[1]) * x + coeffs[2]) * x + coeffs[3];
    }
    double slope(double x) const {
        return (3.0 * coeffs[0] * x + 2.0 * coeffs[1]) * x + coeffs[2];
    }
    double curvature(double x) const { return 6.0 * coeffs[0] * x + 2.0 * coeffs[1]; }

    poly as_poly() const { return poly({coeffs[3], coeffs[2], coeffs[1], coeffs[0]}); }
    poly slope_poly() const { return poly({coeffs[2], 2.0 * coeffs[1], 3.0 * coeffs[0]}); }
    poly curvature_poly() const { return poly({2.0 * coeffs[1], 6.0 * coeffs[0]}); }
};

// Differentiable piecewise cubic on [knots.front(), knots.back()].
// Value and slope must agree at interior knots within the continuity tolerance.
class piecewise_cubic {
public:
    piecewise_cubic() = default;  // empty; assign from from_knots_coeffs before use

    // knots: strictly increasing, size n+1; coeffs: n quadruples (a3,a2,a1,a0).
    // Throws input_error on malformed data or junction mismatch.
    static piecewise_cubic from_knots_coeffs(std::vector<double> knots,
                                             std::vector<std::array<double, 4>> coeffs);

    const std::vector<double>& knots() const { return knots_; }
    const std::vector<cubic_piece>& pieces() const { return pieces_; }
    interval domain() const { return {knots_.front(), knots_.back()}; }

    // Index of the piece whose span contains x; interior knots resolve left.
    std::size_t piece_index(double x) const;

    double operator()(double x) const;
    double slope(double x) const;
    double curvature(double x) const;

private:
    std::vector<double> knots_;
    std::vector<cubic_piece> pieces_;
};

// G(x) = F(-x) on the mirrored domain; a bridge of G at (-beta, -alpha)
// is a bridge of F at (alpha, beta).
piecewise_cubic reflect(const piecewise_cubic& pw);
cubic_piece reflect(const cubic_piece& piece);

// Unit used to decide when a coefficient is effectively zero on a window:
// max |coeff| times the window's magnitude raised to the degree.
double coeff_scale(const poly& p, const interval& window);

// All real roots of p in [window.lo, window.hi], ascending, deduplicated.
// Even-multiplicity touch roots are included. A zero polynomial yields none.
std::vector<double> real_roots_in(const poly& p, const interval& window);

// Cubic through (x0,f0) and (x1,f1) with slopes d0, d1, in global coordinates.
cubic_piece hermite_piece(double x0, double x1, double f0, double d0, double f1, double d1);

}  // namespace lcmaj
