#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "lcmaj/hull.hpp"
#include "lcmaj/majorant.hpp"
#include "lcmaj/spline.hpp"

namespace {

using lcmaj::piecewise_cubic;

// Ten-piece bumpy function with a plateau, two bridge regions and a
// boundary-terminated tail; the same shape the tests exercise.
piecewise_cubic bumpy_function() {
    std::vector<double> knots{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<std::array<double, 4>> coeffs{
        {-1.1, 1.1, 1.0, 1.0},     {1.3, -5.3, 6.6, -0.6},   {-0.9, 6.0, -12.2, 9.4},
        {-1.5, 16.0, -56.0, 67.0}, {0.0, 0.0, 0.0, 3.0},     {0.5, -8.75, 50.0, -90.75},
        {0.0, 1.0, -13.0, 44.25},  {-0.5, 10.75, -76.0, 179.0}, {1.0, -25.5, 216.0, -605.0},
        {0.6, -16.6, 153.0, -467.3},
    };
    return piecewise_cubic::from_knots_coeffs(std::move(knots), std::move(coeffs));
}

// Random differentiable chain of Hermite pieces, deterministic in the seed.
// The domain is centered and the gap ratio bounded: expanding Hermite data into
// global-coordinate monomials rounds like (|x| / h)^3, and long off-center
// chains would overrun the input validator's continuity tolerance.
piecewise_cubic random_chain(std::uint64_t seed, std::size_t pieces) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> gap(0.7, 1.3);
    std::uniform_real_distribution<double> value(-4.0, 4.0);
    std::uniform_real_distribution<double> slope(-6.0, 6.0);

    std::vector<double> knots{0.0};
    for (std::size_t i = 0; i < pieces; ++i) knots.push_back(knots.back() + gap(rng));
    const double shift = 0.5 * knots.back();
    for (double& k : knots) k -= shift;
    std::vector<double> vals(pieces + 1), slopes(pieces + 1);
    for (std::size_t i = 0; i <= pieces; ++i) {
        vals[i] = value(rng);
        slopes[i] = slope(rng);
    }
    std::vector<std::array<double, 4>> coeffs;
    for (std::size_t i = 0; i < pieces; ++i) {
        coeffs.push_back(lcmaj::hermite_piece(knots[i], knots[i + 1], vals[i], slopes[i],
                                              vals[i + 1], slopes[i + 1])
                             .coeffs);
    }
    return piecewise_cubic::from_knots_coeffs(std::move(knots), std::move(coeffs));
}

lcmaj::spline_problem sine_problem(std::size_t nodes) {
    lcmaj::spline_problem prob;
    const double pi = 3.141592653589793;
    for (std::size_t i = 0; i < nodes; ++i) {
        const double x = pi * static_cast<double>(i) / static_cast<double>(nodes - 1);
        prob.nodes.push_back(x);
        prob.values.push_back(std::sin(x));
    }
    prob.d_left = 1.0;
    prob.d_right = -1.0;
    return prob;
}

void BM_analyze_bumpy(benchmark::State& state) {
    const piecewise_cubic pw = bumpy_function();
    for (auto _ : state) {
        benchmark::DoNotOptimize(lcmaj::analyze(pw));
    }
}
BENCHMARK(BM_analyze_bumpy);

void BM_analyze_random(benchmark::State& state) {
    const auto pieces = static_cast<std::size_t>(state.range(0));
    std::vector<piecewise_cubic> inputs;
    for (std::uint64_t seed = 1; seed <= 32; ++seed) {
        inputs.push_back(random_chain(seed, pieces));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lcmaj::analyze(inputs[i]));
        i = (i + 1) % inputs.size();
    }
}
BENCHMARK(BM_analyze_random)->Arg(8)->Arg(32)->Arg(128);

void BM_clamped_spline(benchmark::State& state) {
    const lcmaj::spline_problem prob = sine_problem(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lcmaj::clamped_spline(prob));
    }
}
BENCHMARK(BM_clamped_spline)->Arg(64)->Arg(512)->Arg(4096);

void BM_grid_hull(benchmark::State& state) {
    const piecewise_cubic pw = bumpy_function();
    const auto grid_n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lcmaj::grid_upper_hull(pw, grid_n));
    }
}
BENCHMARK(BM_grid_hull)->Arg(4096)->Arg(65536)->Arg(1048576);

void BM_grid_hull_threaded(benchmark::State& state) {
    const piecewise_cubic pw = bumpy_function();
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lcmaj::grid_upper_hull(pw, 1048576, threads));
    }
}
BENCHMARK(BM_grid_hull_threaded)->Arg(1)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
