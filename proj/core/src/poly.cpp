#include "lcmaj/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lcmaj/errors.hpp"
#include "lcmaj/tolerances.hpp"

namespace lcmaj {

namespace {

double window_magnitude(const interval& window) {
    return std::max({1.0, std::fabs(window.lo), std::fabs(window.hi)});
}

// Highest index whose term is not negligible against the largest term on the window.
int effective_degree(const poly& p, const interval& window) {
    const auto& c = p.coeffs();
    const double m = window_magnitude(window);
    double largest = 0.0;
    double mk = 1.0;
    std::vector<double> term(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        term[k] = std::fabs(c[k]) * mk;
        largest = std::max(largest, term[k]);
        mk *= m;
    }
    if (largest == 0.0) return -1;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
        if (term[static_cast<std::size_t>(k)] > 1e-14 * largest) return k;
    }
    return -1;
}

// Bracketed Newton with bisection fallback; pu and pv have opposite signs.
double polish_root(const poly& p, const poly& dp, double u, double v, double pu, double pv) {
    double x = 0.5 * (u + v);
    for (int iter = 0; iter < 80; ++iter) {
        const double px = p(x);
        if (px == 0.0) return x;
        if ((px > 0.0) == (pu > 0.0)) {
            u = x;
            pu = px;
        } else {
            v = x;
            pv = px;
        }
        const double slope = dp(x);
        double next = (slope != 0.0) ? x - px / slope : 0.5 * (u + v);
        if (!(next > u && next < v) || !std::isfinite(next)) next = 0.5 * (u + v);
        if (std::fabs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(next))) {
            return next;
        }
        x = next;
    }
    return x;
}

void append_root(std::vector<double>& roots, double x) {
    const auto& tols = default_tolerances();
    for (double r : roots) {
        if (std::fabs(r - x) <= tols.point_merge(x)) return;
    }
    roots.push_back(x);
}

}  // namespace

int poly::degree() const {
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
        if (coeffs_[static_cast<std::size_t>(k)] != 0.0) return k;
    }
    return -1;
}

double poly::operator()(double x) const {
    double acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

poly poly::derivative() const {
    if (coeffs_.size() <= 1) return poly({0.0});
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    }
    return poly(std::move(d));
}

poly poly::operator+(const poly& other) const {
    std::vector<double> c(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + other.coeff(k);
    return poly(std::move(c));
}

poly poly::operator-(const poly& other) const {
    std::vector<double> c(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) - other.coeff(k);
    return poly(std::move(c));
}

poly poly::operator*(const poly& other) const {
    if (coeffs_.empty() || other.coeffs_.empty()) return poly({0.0});
    std::vector<double> c(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            c[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return poly(std::move(c));
}

poly poly::scaled(double factor) const {
    std::vector<double> c(coeffs_);
    for (double& v : c) v *= factor;
    return poly(std::move(c));
}

piecewise_cubic piecewise_cubic::from_knots_coeffs(std::vector<double> knots,
                                                   std::vector<std::array<double, 4>> coeffs) {
    if (knots.size() < 2) throw input_error("piecewise: need at least two knots");
    if (coeffs.size() + 1 != knots.size()) {
        throw input_error("piecewise: coefficient rows must be one fewer than knots");
    }
    for (double k : knots) {
        if (!std::isfinite(k)) throw input_error("piecewise: non-finite knot");
    }
    for (const auto& row : coeffs) {
        for (double c : row) {
            if (!std::isfinite(c)) throw input_error("piecewise: non-finite coefficient");
        }
    }
    for (std::size_t i = 1; i < knots.size(); ++i) {
        if (!(knots[i] > knots[i - 1])) {
            std::ostringstream msg;
            msg << "piecewise: knots must be strictly increasing (knot " << i << ")";
            throw input_error(msg.str());
        }
    }

    piecewise_cubic pw;
    pw.knots_ = std::move(knots);
    pw.pieces_.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        pw.pieces_.push_back(cubic_piece{{pw.knots_[i], pw.knots_[i + 1]}, coeffs[i]});
    }

    const auto& tols = default_tolerances();
    for (std::size_t i = 1; i < pw.pieces_.size(); ++i) {
        const double x = pw.knots_[i];
        const cubic_piece& left = pw.pieces_[i - 1];
        const cubic_piece& right = pw.pieces_[i];
        const double lv = left.value(x), rv = right.value(x);
        if (std::fabs(lv - rv) > tols.continuity(std::max(std::fabs(lv), std::fabs(rv)))) {
            std::ostringstream msg;
            msg << "piecewise: value mismatch at knot " << i << " (left " << lv << ", right " << rv
                << ")";
            throw input_error(msg.str());
        }
        const double ls = left.slope(x), rs = right.slope(x);
        if (std::fabs(ls - rs) > tols.continuity(std::max(std::fabs(ls), std::fabs(rs)))) {
            std::ostringstream msg;
            msg << "piecewise: slope mismatch at knot " << i << " (left " << ls << ", right " << rs
                << ")";
            throw input_error(msg.str());
        }
    }
    return pw;
}

std::size_t piecewise_cubic::piece_index(double x) const {
    auto it = std::lower_bound(knots_.begin() + 1, knots_.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - (knots_.begin() + 1));
    return std::min(idx, pieces_.size() - 1);
}

double piecewise_cubic::operator()(double x) const { return pieces_[piece_index(x)].value(x); }

double piecewise_cubic::slope(double x) const { return pieces_[piece_index(x)].slope(x); }

double piecewise_cubic::curvature(double x) const { return pieces_[piece_index(x)].curvature(x); }

cubic_piece reflect(const cubic_piece& piece) {
    cubic_piece out;
    out.span = {-piece.span.hi, -piece.span.lo};
    out.coeffs = {-piece.coeffs[0], piece.coeffs[1], -piece.coeffs[2], piece.coeffs[3]};
    return out;
}

piecewise_cubic reflect(const piecewise_cubic& pw) {
    std::vector<double> knots(pw.knots().rbegin(), pw.knots().rend());
    for (double& k : knots) k = -k;
    std::vector<std::array<double, 4>> coeffs;
    coeffs.reserve(pw.pieces().size());
    for (auto it = pw.pieces().rbegin(); it != pw.pieces().rend(); ++it) {
        coeffs.push_back(reflect(*it).coeffs);
    }
    return piecewise_cubic::from_knots_coeffs(std::move(knots), std::move(coeffs));
}

double coeff_scale(const poly& p, const interval& window) {
    double largest = 0.0;
    for (double c : p.coeffs()) largest = std::max(largest, std::fabs(c));
    const int deg = p.degree();
    return largest * std::pow(window_magnitude(window), std::max(deg, 0));
}

std::vector<double> real_roots_in(const poly& p, const interval& window) {
    const int deg = effective_degree(p, window);
    std::vector<double> roots;
    if (deg <= 0) return roots;

    const auto& tols = default_tolerances();
    const double end_slack = 1e-12 * window_magnitude(window);

    if (deg == 1) {
        const double x = -p.coeff(0) / p.coeff(1);
        if (x >= window.lo - end_slack && x <= window.hi + end_slack) {
            roots.push_back(std::clamp(x, window.lo, window.hi));
        }
        return roots;
    }

    const poly dp = p.derivative();
    std::vector<double> breaks = real_roots_in(dp, window);
    breaks.insert(breaks.begin(), window.lo);
    breaks.push_back(window.hi);
    std::sort(breaks.begin(), breaks.end());

    // Even-multiplicity roots sit at critical points or window ends, where the
    // residual vanishes without a sign change.
    const double value_tol = tols.linear_coeff(coeff_scale(p, window));
    for (double b : breaks) {
        if (std::fabs(p(b)) <= value_tol) append_root(roots, b);
    }

    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double u = breaks[i], v = breaks[i + 1];
        if (v - u <= end_slack) continue;
        const double pu = p(u), pv = p(v);
        if (std::fabs(pu) <= value_tol || std::fabs(pv) <= value_tol) continue;
        if ((pu > 0.0) == (pv > 0.0)) continue;
        append_root(roots, polish_root(p, dp, u, v, pu, pv));
    }

    std::sort(roots.begin(), roots.end());
    return roots;
}

cubic_piece hermite_piece(double x0, double x1, double f0, double d0, double f1, double d1) {
    if (!(x1 > x0)) throw contract_error("poly: hermite nodes must be increasing");
    const double h = x1 - x0;
    const double m = (f1 - f0) / h;
    const double c2 = (3.0 * m - 2.0 * d0 - d1) / h;
    const double c3 = (d0 + d1 - 2.0 * m) / (h * h);
    cubic_piece out;
    out.span = {x0, x1};
    out.coeffs = {c3, c2 - 3.0 * c3 * x0, d0 - 2.0 * c2 * x0 + 3.0 * c3 * x0 * x0,
                  f0 - d0 * x0 + c2 * x0 * x0 - c3 * x0 * x0 * x0};
    return out;
}

}  // namespace lcmaj
