#include <benchmark/benchmark.h>

#include "polyellip/render.hpp"
#include "polyellip/solver.hpp"

using namespace polyellip;

namespace {

const Polynomial kSmale({{2, 0}, {-2, 0}, {0, 0}, {1, 0}});
const Polynomial kUnity({{-1, 0}, {0, 0}, {0, 0}, {1, 0}});

}  // namespace

static void NewtonSolve(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(newton_solve(kUnity, {2, 2}));
    }
}
BENCHMARK(NewtonSolve);

static void NewtonEllipsoidSolve(benchmark::State& state) {
    SolveOptions opts;
    opts.rng_seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(newton_ellipsoid_solve(kUnity, Complex{2, 2}, opts));
    }
}
BENCHMARK(NewtonEllipsoidSolve);

static void HalleyEllipsoidSolve(benchmark::State& state) {
    SolveOptions opts;
    opts.rng_seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bm_ellipsoid_solve(kUnity, Complex{2, 2}, 3, opts));
    }
}
BENCHMARK(HalleyEllipsoidSolve);

static void AllRootsSmale(benchmark::State& state) {
    SolveOptions opts;
    opts.rng_seed = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(all_roots(kSmale, opts));
    }
}
BENCHMARK(AllRootsSmale);

static void BasinRow(benchmark::State& state) {
    // one 64-pixel row of the standard rectangle
    SolveOptions opts;
    opts.rng_seed = 3;
    const Method method = Method::newton_ellipsoid();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            basin_grid(kUnity, method, {-4, -4, 4, 4}, 64, 1, opts, 1));
    }
}
BENCHMARK(BasinRow);
