#include "lcmaj/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "lcmaj/errors.hpp"
#include "lcmaj/tolerances.hpp"

namespace lcmaj {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("input: invalid JSON: ") + e.what());
    }
}

double number_at(const json& j, const char* where) {
    if (!j.is_number()) throw input_error(std::string("input: ") + where + " must be a number");
    return j.get<double>();
}

std::vector<double> number_array(const json& j, const char* field) {
    if (!j.is_array()) {
        throw input_error(std::string("input: field \"") + field + "\" must be an array");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (const json& v : j) out.push_back(number_at(v, field));
    return out;
}

void append_number_array(std::string& s, const std::vector<double>& xs) {
    s += "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) s += ",";
        s += format_double(xs[i]);
    }
    s += "]";
}

void append_interval_array(std::string& s, const std::vector<interval>& spans) {
    s += "[";
    for (std::size_t i = 0; i < spans.size(); ++i) {
        if (i > 0) s += ",";
        s += "[" + format_double(spans[i].lo) + "," + format_double(spans[i].hi) + "]";
    }
    s += "]";
}

void append_coeff_rows(std::string& s, const std::vector<cubic_piece>& pieces) {
    s += "[";
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i > 0) s += ",";
        s += "[";
        for (std::size_t k = 0; k < 4; ++k) {
            if (k > 0) s += ",";
            s += format_double(pieces[i].coeffs[k]);
        }
        s += "]";
    }
    s += "]";
}

// Uniform grid over the domain plus every component endpoint, ascending.
std::vector<double> sample_points(const piecewise_cubic& pw, const majorant_result& r,
                                  std::size_t samples) {
    const interval dom = pw.domain();
    const auto& tols = default_tolerances();
    std::vector<double> xs;
    const std::size_t n = std::max<std::size_t>(samples, 2);
    const double step = dom.length() / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        xs.push_back(i + 1 == n ? dom.hi : dom.lo + step * static_cast<double>(i));
    }
    for (const interval& c : r.components) {
        xs.push_back(c.lo);
        xs.push_back(c.hi);
    }
    std::sort(xs.begin(), xs.end());
    std::vector<double> out;
    for (double x : xs) {
        if (out.empty() || x - out.back() > tols.point_merge(x)) out.push_back(x);
    }
    return out;
}

std::string max_and_components(const majorant_result& r) {
    std::string s = "\"M\":" + format_double(r.max_info.max_value);
    s += ",\"C\":[" + format_double(r.max_info.plateau_hull.lo) + "," +
         format_double(r.max_info.plateau_hull.hi) + "]";
    s += ",\"components\":";
    append_interval_array(s, r.components);
    return s;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

piecewise_cubic parse_piecewise(const std::string& text) {
    const json j = parse_or_throw(text);
    if (!j.is_object()) throw input_error("input: top level must be an object");
    if (!j.contains("knots")) throw input_error("input: missing field \"knots\"");
    if (!j.contains("coeffs")) throw input_error("input: missing field \"coeffs\"");
    std::vector<double> knots = number_array(j["knots"], "knots");
    if (!j["coeffs"].is_array()) throw input_error("input: field \"coeffs\" must be an array");
    std::vector<std::array<double, 4>> coeffs;
    for (const json& row : j["coeffs"]) {
        std::vector<double> r = number_array(row, "coeffs");
        if (r.size() != 4) {
            throw input_error("input: each coefficient row must have four entries");
        }
        coeffs.push_back({r[0], r[1], r[2], r[3]});
    }
    return piecewise_cubic::from_knots_coeffs(std::move(knots), std::move(coeffs));
}

spline_problem parse_spline_problem(const std::string& text, std::optional<double> clamp_left,
                                    std::optional<double> clamp_right) {
    const json j = parse_or_throw(text);
    if (!j.is_object()) throw input_error("input: top level must be an object");
    if (!j.contains("nodes")) throw input_error("input: missing field \"nodes\"");
    if (!j.contains("values")) throw input_error("input: missing field \"values\"");
    spline_problem prob;
    prob.nodes = number_array(j["nodes"], "nodes");
    prob.values = number_array(j["values"], "values");
    if (clamp_left) {
        prob.d_left = *clamp_left;
    } else if (j.contains("d_left")) {
        prob.d_left = number_at(j["d_left"], "d_left");
    } else {
        throw input_error("input: missing clamp slope d_left");
    }
    if (clamp_right) {
        prob.d_right = *clamp_right;
    } else if (j.contains("d_right")) {
        prob.d_right = number_at(j["d_right"], "d_right");
    } else {
        throw input_error("input: missing clamp slope d_right");
    }
    return prob;
}

std::string piecewise_json(const piecewise_cubic& pw) {
    std::string s = "{\"knots\":";
    append_number_array(s, pw.knots());
    s += ",\"coeffs\":";
    append_coeff_rows(s, pw.pieces());
    s += "}";
    return s;
}

std::string components_json(const majorant_result& r) {
    return "{" + max_and_components(r) + "}";
}

std::string majorant_json(const piecewise_cubic& pw, const majorant_result& r,
                          std::size_t samples) {
    std::string s = "{" + max_and_components(r) + ",\"samples\":[";
    const std::vector<double> xs = sample_points(pw, r, samples);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) s += ",";
        s += "[" + format_double(xs[i]) + "," + format_double(pw(xs[i])) + "," +
             format_double(r.majorant(xs[i])) + "," + format_double(r.level(xs[i])) + "]";
    }
    s += "]}";
    return s;
}

std::string majorant_csv(const piecewise_cubic& pw, const majorant_result& r,
                         std::size_t samples) {
    std::string s = "x,F,Fhat,level\n";
    for (double x : sample_points(pw, r, samples)) {
        s += format_double(x) + "," + format_double(pw(x)) + "," + format_double(r.majorant(x)) +
             "," + format_double(r.level(x)) + "\n";
    }
    return s;
}

std::string level_json(const level_function& level) {
    std::string s = "{\"knots\":";
    append_number_array(s, level.knots);
    s += ",\"coeffs\":";
    append_coeff_rows(s, level.pieces);
    s += "}";
    return s;
}

std::string partition_json(const refined_partition& rp) {
    std::string s = "{\"working\":[" + format_double(rp.working.lo) + "," +
                    format_double(rp.working.hi) + "],\"cells\":[";
    for (std::size_t i = 0; i < rp.cells.size(); ++i) {
        const cell& c = rp.cells[i];
        if (i > 0) s += ",";
        s += "{\"span\":[" + format_double(c.span.lo) + "," + format_double(c.span.hi) + "]";
        s += ",\"piece\":" + std::to_string(c.piece_index);
        s += ",\"monotonicity\":\"";
        switch (c.mono) {
            case monotonicity::increasing: s += "increasing"; break;
            case monotonicity::decreasing: s += "decreasing"; break;
            case monotonicity::constant: s += "constant"; break;
        }
        s += "\",\"curvature\":\"";
        switch (c.curv) {
            case curvature_class::strictly_concave: s += "strictly_concave"; break;
            case curvature_class::linear: s += "linear"; break;
            case curvature_class::strictly_convex: s += "strictly_convex"; break;
        }
        s += "\",\"group\":" + std::to_string(c.group_id) + "}";
    }
    s += "]}";
    return s;
}

std::string mesh_json(const mesh_plan& plan) {
    return "{\"norm_h\":" + format_double(plan.norm_h) +
           ",\"count\":" + std::to_string(plan.count) + "}";
}

std::string spline_json(const piecewise_cubic& s, const std::optional<error_certificate>& cert) {
    std::string out = "{\"knots\":";
    append_number_array(out, s.knots());
    out += ",\"coeffs\":";
    append_coeff_rows(out, s.pieces());
    if (cert) {
        out += ",\"certificate\":{\"mesh_norm\":" + format_double(cert->mesh_norm);
        out += ",\"fourth_deriv_bound\":" + format_double(cert->fourth_deriv_bound);
        out += ",\"deriv_bound\":" + format_double(cert->deriv_bound);
        out += ",\"sup_majorant_bound\":" + format_double(cert->sup_majorant_bound);
        out += ",\"level_bound\":" + format_double(cert->level_bound) + "}";
    }
    out += "}";
    return out;
}

std::string hull_comparison_json(const hull_comparison& cmp) {
    std::string s = "{\"sup_diff\":" + format_double(cmp.sup_diff);
    s += ",\"exact_count\":" + std::to_string(cmp.exact_count);
    s += ",\"oracle_count\":" + std::to_string(cmp.oracle_count);
    s += ",\"endpoint_mismatch\":" + format_double(cmp.endpoint_mismatch);
    s += std::string(",\"components_matched\":") + (cmp.components_matched ? "true" : "false");
    s += ",\"oracle_components\":";
    append_interval_array(s, cmp.oracle_components);
    s += "}";
    return s;
}

}  // namespace lcmaj
