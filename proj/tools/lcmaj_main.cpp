#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lcmaj/errors.hpp"
#include "lcmaj/hull.hpp"
#include "lcmaj/json_io.hpp"
#include "lcmaj/majorant.hpp"
#include "lcmaj/spline.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lcmaj::input_error("input: cannot open file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

lcmaj::trace_sink make_trace(bool enabled) {
    if (!enabled) return {};
    return [](const std::string& line) { std::cerr << line << "\n"; };
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Least concave majorant and level function of piecewise cubics"};
    app.require_subcommand(1);

    std::string input_path;
    std::size_t samples = 1001;
    std::string out_format = "json";
    std::size_t grid_n = 10001;
    bool trace_enabled = false;
    unsigned threads = 1;

    auto add_common = [&](CLI::App* sub, bool wants_input) {
        if (wants_input) sub->add_option("input", input_path, "Input JSON file")->required();
        sub->add_flag("--trace", trace_enabled, "Emit march trace as JSON lines on stderr");
        sub->add_option("--threads", threads, "Worker threads for grid evaluation");
    };

    CLI::App* cmd_components = app.add_subcommand("components", "Maximal bridge intervals");
    add_common(cmd_components, true);

    CLI::App* cmd_majorant = app.add_subcommand("majorant", "Sampled F, majorant and level");
    add_common(cmd_majorant, true);
    cmd_majorant->add_option("--samples", samples, "Uniform sample count");
    cmd_majorant->add_option("--out", out_format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* cmd_level = app.add_subcommand("level", "Level function pieces");
    add_common(cmd_level, true);

    CLI::App* cmd_partition = app.add_subcommand("partition", "Refined classified partition");
    add_common(cmd_partition, true);

    CLI::App* cmd_spline = app.add_subcommand("spline", "Clamped cubic spline of samples");
    add_common(cmd_spline, true);
    std::optional<double> clamp_left, clamp_right, g4;
    cmd_spline->add_option("--clamp-left", clamp_left, "Left end slope");
    cmd_spline->add_option("--clamp-right", clamp_right, "Right end slope");
    cmd_spline->add_option("--g4", g4, "Fourth-derivative bound for the certificate");

    CLI::App* cmd_bound = app.add_subcommand("bound", "Mesh spacing for a target tolerance");
    double eps = 0.0, g4_bound = 0.0, length = 0.0;
    cmd_bound->add_option("--eps", eps, "Target interpolation tolerance")->required();
    cmd_bound->add_option("--g4", g4_bound, "Fourth-derivative bound")->required();
    cmd_bound->add_option("--length", length, "Domain length")->required();

    CLI::App* cmd_compare = app.add_subcommand("compare", "Exact result vs grid hull oracle");
    add_common(cmd_compare, true);
    cmd_compare->add_option("--grid", grid_n, "Oracle grid size");

    CLI11_PARSE(app, argc, argv);

    try {
        const lcmaj::trace_sink trace = make_trace(trace_enabled);
        if (cmd_components->parsed()) {
            const lcmaj::piecewise_cubic pw = lcmaj::parse_piecewise(read_file(input_path));
            std::cout << lcmaj::components_json(lcmaj::analyze(pw, trace)) << "\n";
        } else if (cmd_majorant->parsed()) {
            const lcmaj::piecewise_cubic pw = lcmaj::parse_piecewise(read_file(input_path));
            const lcmaj::majorant_result res = lcmaj::analyze(pw, trace);
            if (out_format == "csv") {
                std::cout << lcmaj::majorant_csv(pw, res, samples);
            } else {
                std::cout << lcmaj::majorant_json(pw, res, samples) << "\n";
            }
        } else if (cmd_level->parsed()) {
            const lcmaj::piecewise_cubic pw = lcmaj::parse_piecewise(read_file(input_path));
            std::cout << lcmaj::level_json(lcmaj::analyze(pw, trace).level) << "\n";
        } else if (cmd_partition->parsed()) {
            const lcmaj::piecewise_cubic pw = lcmaj::parse_piecewise(read_file(input_path));
            std::cout << lcmaj::partition_json(lcmaj::refine(pw, pw.domain())) << "\n";
        } else if (cmd_spline->parsed()) {
            const lcmaj::spline_problem prob =
                lcmaj::parse_spline_problem(read_file(input_path), clamp_left, clamp_right);
            const lcmaj::piecewise_cubic s = lcmaj::clamped_spline(prob);
            std::optional<lcmaj::error_certificate> cert;
            if (g4) {
                double mesh = 0.0;
                for (std::size_t i = 1; i < prob.nodes.size(); ++i) {
                    mesh = std::max(mesh, prob.nodes[i] - prob.nodes[i - 1]);
                }
                cert = lcmaj::certify(s.domain(), mesh, *g4);
            }
            std::cout << lcmaj::spline_json(s, cert) << "\n";
        } else if (cmd_bound->parsed()) {
            std::cout << lcmaj::mesh_json(lcmaj::mesh_for_tolerance(eps, g4_bound, length))
                      << "\n";
        } else if (cmd_compare->parsed()) {
            const lcmaj::piecewise_cubic pw = lcmaj::parse_piecewise(read_file(input_path));
            const lcmaj::majorant_result res = lcmaj::analyze(pw, trace);
            std::cout << lcmaj::hull_comparison_json(
                             lcmaj::compare_with_hull(pw, res, grid_n, threads))
                      << "\n";
        }
    } catch (const lcmaj::input_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
