#include <doctest.h>

#include <cstdlib>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "lcmaj/errors.hpp"
#include "lcmaj/json_io.hpp"

using namespace lcmaj;

TEST_CASE("format_double round-trips exactly") {
    const std::vector<double> values = {0.0,    0.5,     1.0 / 3.0, -2.75,  1e300,
                                        1e-300, 0.1,     123456.75, -1e-9,  3.0,
                                        2.0 / 7.0, -0.0324893, 1e17,  -1e17};
    for (double v : values) {
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(3.0) == "3");
}

TEST_CASE("piecewise JSON round-trip") {
    const piecewise_cubic pw = testing::demo_function();
    const piecewise_cubic back = parse_piecewise(piecewise_json(pw));
    REQUIRE(back.knots().size() == pw.knots().size());
    for (std::size_t i = 0; i < pw.knots().size(); ++i) {
        CHECK(back.knots()[i] == pw.knots()[i]);
    }
    REQUIRE(back.pieces().size() == pw.pieces().size());
    for (std::size_t i = 0; i < pw.pieces().size(); ++i) {
        for (int k = 0; k < 4; ++k) {
            CHECK(back.pieces()[i].coeffs[k] == pw.pieces()[i].coeffs[k]);
        }
    }
}

TEST_CASE("piecewise parse errors name the offending field") {
    CHECK_THROWS_WITH_AS(parse_piecewise("not json"),
                         doctest::Contains("input: invalid JSON"), input_error);
    CHECK_THROWS_WITH_AS(parse_piecewise("[1,2]"), "input: top level must be an object",
                         input_error);
    CHECK_THROWS_WITH_AS(parse_piecewise("{\"coeffs\":[]}"),
                         "input: missing field \"knots\"", input_error);
    CHECK_THROWS_WITH_AS(parse_piecewise("{\"knots\":[0,1]}"),
                         "input: missing field \"coeffs\"", input_error);
    CHECK_THROWS_WITH_AS(parse_piecewise("{\"knots\":[0,1],\"coeffs\":[[1,2,3]]}"),
                         "input: each coefficient row must have four entries", input_error);
    CHECK_THROWS_WITH_AS(parse_piecewise("{\"knots\":\"x\",\"coeffs\":[]}"),
                         "input: field \"knots\" must be an array", input_error);
    CHECK_THROWS_AS(parse_piecewise("{\"knots\":[0,\"a\"],\"coeffs\":[[0,0,0,1]]}"),
                    input_error);
}

TEST_CASE("spline problem parsing honors flag overrides") {
    const std::string text =
        "{\"nodes\":[0,1,2],\"values\":[0,1,0],\"d_left\":0.25,\"d_right\":-0.25}";
    const spline_problem direct = parse_spline_problem(text, std::nullopt, std::nullopt);
    CHECK(direct.d_left == 0.25);
    CHECK(direct.d_right == -0.25);
    CHECK(direct.nodes.size() == 3);

    const spline_problem flagged = parse_spline_problem(text, 2.0, std::nullopt);
    CHECK(flagged.d_left == 2.0);
    CHECK(flagged.d_right == -0.25);

    const std::string bare = "{\"nodes\":[0,1],\"values\":[0,1]}";
    CHECK_THROWS_WITH_AS(parse_spline_problem(bare, 1.0, std::nullopt),
                         "input: missing clamp slope d_right", input_error);
    CHECK_THROWS_WITH_AS(parse_spline_problem(bare, std::nullopt, 1.0),
                         "input: missing clamp slope d_left", input_error);
    CHECK_NOTHROW(parse_spline_problem(bare, 1.0, 1.0));
    CHECK_THROWS_WITH_AS(parse_spline_problem("{\"values\":[0]}", 0.0, 0.0),
                         "input: missing field \"nodes\"", input_error);
}

TEST_CASE("components JSON carries the maximum structure") {
    const piecewise_cubic pw = testing::demo_function();
    const majorant_result res = analyze(pw);
    const auto j = nlohmann::json::parse(components_json(res));
    CHECK(j["M"].get<double>() == doctest::Approx(3.0));
    CHECK(j["C"][0].get<double>() == doctest::Approx(4.0));
    CHECK(j["C"][1].get<double>() == doctest::Approx(8.0));
    REQUIRE(j["components"].size() == 4);
    CHECK(j["components"][2][0].get<double>() == doctest::Approx(5.0));
    CHECK(j["components"][2][1].get<double>() == doctest::Approx(8.0));
}

TEST_CASE("majorant samples include the component endpoints") {
    const piecewise_cubic pw = testing::demo_function();
    const majorant_result res = analyze(pw);
    const auto j = nlohmann::json::parse(majorant_json(pw, res, 101));
    REQUIRE(j.contains("samples"));
    const auto& samples = j["samples"];
    REQUIRE(samples.size() >= 101);

    double prev = -1.0;
    for (const auto& row : samples) {
        REQUIRE(row.size() == 4);
        const double x = row[0].get<double>();
        CHECK(x > prev);
        prev = x;
        CHECK(row[2].get<double>() >= row[1].get<double>() - 1e-9);
    }
    for (const interval& c : res.components) {
        bool lo_found = false, hi_found = false;
        for (const auto& row : samples) {
            lo_found = lo_found || row[0].get<double>() == c.lo;
            hi_found = hi_found || row[0].get<double>() == c.hi;
        }
        CHECK(lo_found);
        CHECK(hi_found);
    }
}

TEST_CASE("majorant CSV has a header and one row per sample") {
    const piecewise_cubic pw = testing::demo_function();
    const majorant_result res = analyze(pw);
    const std::string csv = majorant_csv(pw, res, 11);
    CHECK(csv.rfind("x,F,Fhat,level\n", 0) == 0);
    std::size_t lines = 0;
    for (char ch : csv) lines += ch == '\n';
    const auto j = nlohmann::json::parse(majorant_json(pw, res, 11));
    CHECK(lines == 1 + j["samples"].size());
}

TEST_CASE("level, partition, mesh and hull reports are valid JSON") {
    const piecewise_cubic pw = testing::demo_function();
    const majorant_result res = analyze(pw);

    const auto level = nlohmann::json::parse(level_json(res.level));
    CHECK(level["knots"].size() == level["coeffs"].size() + 1);
    for (const auto& row : level["coeffs"]) {
        REQUIRE(row.size() == 4);
        CHECK(row[0].get<double>() == 0.0);
    }

    const auto part = nlohmann::json::parse(partition_json(refine(pw, pw.domain())));
    REQUIRE(part["cells"].size() > 0);
    for (const auto& c : part["cells"]) {
        CHECK(c.contains("span"));
        CHECK(c.contains("monotonicity"));
        CHECK(c.contains("curvature"));
        CHECK(c.contains("group"));
    }

    const auto mesh = nlohmann::json::parse(mesh_json(mesh_for_tolerance(0.001, 700.0, 6.0)));
    CHECK(mesh["count"].get<int>() == 185);

    const auto cmp = nlohmann::json::parse(
        hull_comparison_json(compare_with_hull(pw, res, 2001, 1)));
    CHECK(cmp["components_matched"].get<bool>());
    CHECK(cmp["exact_count"].get<int>() == 4);

    const piecewise_cubic s = clamped_spline(testing::trimodal_spline_problem(10));
    const auto bare = nlohmann::json::parse(spline_json(s, std::nullopt));
    CHECK_FALSE(bare.contains("certificate"));
    const auto certified =
        nlohmann::json::parse(spline_json(s, certify(s.domain(), 0.6, 700.0)));
    REQUIRE(certified.contains("certificate"));
    for (const char* key : {"mesh_norm", "fourth_deriv_bound", "deriv_bound",
                            "sup_majorant_bound", "level_bound"}) {
        CHECK(certified["certificate"].contains(key));
    }
}

TEST_CASE("reports are deterministic") {
    const piecewise_cubic pw = testing::demo_function();
    const std::string a = components_json(analyze(pw));
    const std::string b = components_json(analyze(pw));
    CHECK(a == b);
    CHECK(majorant_csv(pw, analyze(pw), 101) == majorant_csv(pw, analyze(pw), 101));
}
