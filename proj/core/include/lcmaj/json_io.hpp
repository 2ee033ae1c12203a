#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "lcmaj/hull.hpp"
#include "lcmaj/majorant.hpp"
#include "lcmaj/partition.hpp"
#include "lcmaj/poly.hpp"
#include "lcmaj/spline.hpp"

namespace lcmaj {

// Shortest round-trip decimal form; all numeric output goes through this so
// byte-identical reruns stay byte-identical.
std::string format_double(double v);

// {"knots": [...], "coeffs": [[a3,a2,a1,a0], ...]}
piecewise_cubic parse_piecewise(const std::string& text);

// {"nodes": [...], "values": [...], "d_left": ..., "d_right": ...}; either
// clamp may instead come from the CLI flags.
spline_problem parse_spline_problem(const std::string& text, std::optional<double> clamp_left,
                                    std::optional<double> clamp_right);

std::string piecewise_json(const piecewise_cubic& pw);
std::string components_json(const majorant_result& r);
std::string majorant_json(const piecewise_cubic& pw, const majorant_result& r,
                          std::size_t samples);
std::string majorant_csv(const piecewise_cubic& pw, const majorant_result& r,
                         std::size_t samples);
std::string level_json(const level_function& level);
std::string partition_json(const refined_partition& rp);
std::string mesh_json(const mesh_plan& plan);
std::string spline_json(const piecewise_cubic& s, const std::optional<error_certificate>& cert);
std::string hull_comparison_json(const hull_comparison& cmp);

}  // namespace lcmaj
