#include <benchmark/benchmark.h>

#include <vector>

#include "polyellip/basic_family.hpp"
#include "polyellip/ellipse.hpp"
#include "polyellip/polynomial.hpp"
#include "polyellip/root_bounds.hpp"
#include "polyellip/splitmix.hpp"

using namespace polyellip;

namespace {

Polynomial random_poly(int degree, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Complex> coeffs;
    coeffs.reserve(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) {
        coeffs.push_back({rng.next_in(-3, 3), rng.next_in(-3, 3)});
    }
    coeffs.push_back({1.0, 0.5});
    return Polynomial(coeffs);
}

}  // namespace

static void HornerEval(benchmark::State& state) {
    const Polynomial p = random_poly(static_cast<int>(state.range(0)), 1);
    SplitMix64 rng(2);
    const Complex z{rng.next_in(-4, 4), rng.next_in(-4, 4)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(p.eval(z));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(HornerEval)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void DerivativeCascade(benchmark::State& state) {
    const Polynomial p = random_poly(static_cast<int>(state.range(0)), 3);
    const Complex z{0.7, -1.1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(p.eval_derivs(z, 3));
    }
}
BENCHMARK(DerivativeCascade)->Arg(8)->Arg(16)->Arg(32);

static void BasicFamilyStep(benchmark::State& state) {
    const Polynomial p = random_poly(8, 4);
    const Complex z{1.3, 0.4};
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(b_m_step(p, z, order));
    }
}
BENCHMARK(BasicFamilyStep)->DenseRange(2, 6);

static void RootBound(benchmark::State& state) {
    const Polynomial p = random_poly(12, 5);
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bound(p, order));
    }
}
BENCHMARK(RootBound)->Arg(2)->Arg(3)->Arg(4);

static void EllipseCut(benchmark::State& state) {
    Ellipse2 e = Ellipse2::disk({0, 0}, 4.0);
    SplitMix64 rng(6);
    for (auto _ : state) {
        const CutNormal a{rng.next_in(-1, 1), rng.next_in(0.1, 1)};
        e = e.cut(a);
        benchmark::DoNotOptimize(e);
        if (e.det() < 1e-200) {
            e = Ellipse2::disk({0, 0}, 4.0);
        }
    }
}
BENCHMARK(EllipseCut);
