#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "lcmaj/errors.hpp"
#include "lcmaj/poly.hpp"

using namespace lcmaj;

TEST_CASE("poly evaluation and arithmetic") {
    const poly p({1.0, -2.0, 3.0});  // 3x^2 - 2x + 1
    CHECK(p(0.0) == doctest::Approx(1.0));
    CHECK(p(2.0) == doctest::Approx(9.0));
    CHECK(p.degree() == 2);

    const poly d = p.derivative();
    CHECK(d(1.0) == doctest::Approx(4.0));
    CHECK(d.degree() == 1);

    const poly q({0.0, 1.0});  // x
    const poly prod = p * q;
    CHECK(prod(2.0) == doctest::Approx(18.0));
    CHECK((p + q)(2.0) == doctest::Approx(11.0));
    CHECK((p - q)(2.0) == doctest::Approx(7.0));
    CHECK(p.scaled(-2.0)(2.0) == doctest::Approx(-18.0));
}

TEST_CASE("real_roots_in recovers constructed roots") {
    // Roots chosen first, polynomial built from them: the roots are the oracle.
    std::mt19937_64 rng(90210);
    std::uniform_real_distribution<double> pick(-5.0, 5.0);
    std::uniform_real_distribution<double> lead(0.2, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        double r1 = pick(rng), r2 = pick(rng), r3 = pick(rng);
        if (r2 < r1) std::swap(r1, r2);
        if (r3 < r2) std::swap(r2, r3);
        if (r2 < r1) std::swap(r1, r2);
        if (r2 - r1 < 1e-2 || r3 - r2 < 1e-2) continue;
        const double c = (trial % 2 == 0) ? lead(rng) : -lead(rng);
        const poly p =
            poly({-r1, 1.0}) * poly({-r2, 1.0}) * poly({-r3, 1.0}).scaled(c);
        const auto roots = real_roots_in(p, {-6.0, 6.0});
        REQUIRE(roots.size() == 3);
        CHECK(roots[0] == doctest::Approx(r1).epsilon(1e-9));
        CHECK(roots[1] == doctest::Approx(r2).epsilon(1e-9));
        CHECK(roots[2] == doctest::Approx(r3).epsilon(1e-9));
    }
}

TEST_CASE("real_roots_in corner cases") {
    SUBCASE("double root is reported once") {
        const poly p = poly({-2.0, 1.0}) * poly({-2.0, 1.0});  // (x-2)^2
        const auto roots = real_roots_in(p, {0.0, 5.0});
        REQUIRE(roots.size() == 1);
        CHECK(roots[0] == doctest::Approx(2.0).epsilon(1e-7));
    }
    SUBCASE("triple root") {
        const poly p = poly({-1.0, 1.0}) * poly({-1.0, 1.0}) * poly({-1.0, 1.0});
        const auto roots = real_roots_in(p, {0.0, 2.0});
        REQUIRE(roots.size() == 1);
        CHECK(roots[0] == doctest::Approx(1.0).epsilon(1e-5));
    }
    SUBCASE("root at the window boundary") {
        const poly p({-3.0, 1.0});  // x - 3
        const auto roots = real_roots_in(p, {0.0, 3.0});
        REQUIRE(roots.size() == 1);
        CHECK(roots[0] == doctest::Approx(3.0));
    }
    SUBCASE("zero polynomial has no isolated roots") {
        CHECK(real_roots_in(poly({0.0, 0.0, 0.0}), {0.0, 1.0}).empty());
    }
    SUBCASE("nonzero constant has no roots") {
        CHECK(real_roots_in(poly::constant(2.5), {0.0, 1.0}).empty());
    }
    SUBCASE("roots outside the window are ignored") {
        const poly p = poly({-1.0, 1.0}) * poly({-9.0, 1.0});
        const auto roots = real_roots_in(p, {0.0, 5.0});
        REQUIRE(roots.size() == 1);
        CHECK(roots[0] == doctest::Approx(1.0));
    }
    SUBCASE("negligible leading coefficient falls back to lower degree") {
        const poly p({-2.0, 1.0, 0.0, 1e-18});  // effectively x - 2
        const auto roots = real_roots_in(p, {0.0, 5.0});
        REQUIRE(roots.size() == 1);
        CHECK(roots[0] == doctest::Approx(2.0).epsilon(1e-9));
    }
}

TEST_CASE("piecewise validation") {
    SUBCASE("demo fixture satisfies the junction invariants") {
        CHECK_NOTHROW(testing::demo_function());
    }
    SUBCASE("value mismatch names the knot") {
        CHECK_THROWS_AS(piecewise_cubic::from_knots_coeffs(
                            {0.0, 1.0, 2.0},
                            {{0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 0.0, 2.0}}),
                        input_error);
    }
    SUBCASE("slope mismatch is rejected") {
        // Both pieces pass through (1, 1) but with slopes 1 and -1.
        CHECK_THROWS_AS(piecewise_cubic::from_knots_coeffs(
                            {0.0, 1.0, 2.0},
                            {{0.0, 0.0, 1.0, 0.0}, {0.0, 0.0, -1.0, 2.0}}),
                        input_error);
    }
    SUBCASE("non-increasing knots are rejected") {
        CHECK_THROWS_AS(piecewise_cubic::from_knots_coeffs(
                            {0.0, 1.0, 1.0}, {{0, 0, 0, 1}, {0, 0, 0, 1}}),
                        input_error);
    }
    SUBCASE("non-finite input is rejected") {
        CHECK_THROWS_AS(piecewise_cubic::from_knots_coeffs(
                            {0.0, std::nan("")}, {{0, 0, 0, 1}}),
                        input_error);
    }
    SUBCASE("coefficient row count must match") {
        CHECK_THROWS_AS(piecewise_cubic::from_knots_coeffs({0.0, 1.0}, {}), input_error);
    }
}

TEST_CASE("piece lookup resolves interior knots to the left piece") {
    const piecewise_cubic pw = testing::demo_function();
    CHECK(pw.piece_index(0.0) == 0);
    CHECK(pw.piece_index(1.0) == 0);
    CHECK(pw.piece_index(1.5) == 1);
    CHECK(pw.piece_index(10.0) == 9);
    CHECK(pw(4.5) == doctest::Approx(3.0));
    CHECK(pw.slope(4.5) == doctest::Approx(0.0));
    CHECK(pw.curvature(6.5) == doctest::Approx(2.0));
}

TEST_CASE("reflection mirrors the function") {
    const piecewise_cubic pw = testing::demo_function();
    const piecewise_cubic g = reflect(pw);
    CHECK(g.domain().lo == doctest::Approx(-10.0));
    CHECK(g.domain().hi == doctest::Approx(0.0));
    for (double x : {-9.7, -6.3, -4.0, -1.2, -0.1}) {
        CHECK(g(x) == doctest::Approx(pw(-x)).epsilon(1e-12));
        CHECK(g.slope(x) == doctest::Approx(-pw.slope(-x)).epsilon(1e-12));
    }
    const piecewise_cubic back = reflect(g);
    for (std::size_t i = 0; i < pw.pieces().size(); ++i) {
        for (int k = 0; k < 4; ++k) {
            CHECK(back.pieces()[i].coeffs[k] ==
                  doctest::Approx(pw.pieces()[i].coeffs[k]).epsilon(1e-14));
        }
    }
}

TEST_CASE("hermite_piece matches its boundary data") {
    const cubic_piece p = hermite_piece(1.5, 3.0, 2.0, -1.0, 4.0, 0.5);
    CHECK(p.value(1.5) == doctest::Approx(2.0));
    CHECK(p.slope(1.5) == doctest::Approx(-1.0));
    CHECK(p.value(3.0) == doctest::Approx(4.0));
    CHECK(p.slope(3.0) == doctest::Approx(0.5));

    // Sampling a cubic and rebuilding from Hermite data reproduces it.
    const cubic_piece q{{0.0, 2.0}, {2.0, -3.0, 1.0, 7.0}};
    const cubic_piece r = hermite_piece(0.0, 2.0, q.value(0.0), q.slope(0.0), q.value(2.0),
                                        q.slope(2.0));
    for (int k = 0; k < 4; ++k) {
        CHECK(r.coeffs[k] == doctest::Approx(q.coeffs[k]).epsilon(1e-12));
    }
}
