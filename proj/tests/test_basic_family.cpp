#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "polyellip/basic_family.hpp"
#include "polyellip/errors.hpp"
#include "polyellip/splitmix.hpp"
#include "test_support.hpp"

using polyellip::b_m_step;
using polyellip::Complex;
using polyellip::d_sequence;
using polyellip::DegenerateDenominator;
using polyellip::DSequence;
using polyellip::family_direction;
using polyellip::Polynomial;
using polyellip::SplitMix64;

namespace {

const Polynomial z2m1({{-1, 0}, {0, 0}, {1, 0}});
const Polynomial z3m1({{-1, 0}, {0, 0}, {0, 0}, {1, 0}});
const Polynomial smale({{2, 0}, {-2, 0}, {0, 0}, {1, 0}});

Polynomial random_poly(SplitMix64& rng, int max_degree) {
    const int degree = 1 + static_cast<int>(rng.next() % max_degree);
    std::vector<Complex> coeffs;
    for (int i = 0; i < degree; ++i) {
        coeffs.push_back({rng.next_in(-3, 3), rng.next_in(-3, 3)});
    }
    coeffs.push_back({rng.next_in(0.2, 3), rng.next_in(0.2, 3)});  // nonzero lead
    return Polynomial(coeffs);
}

}  // namespace

TEST_CASE("D sequence starts at 1 and D_1 = p'") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial p = random_poly(rng, 8);
        const Complex z{rng.next_in(-4, 4), rng.next_in(-4, 4)};
        const DSequence seq = d_sequence(p, z, 2);
        REQUIRE(seq.values.size() == 2);
        CHECK(seq.values[0] == Complex{1, 0});
        CHECK(seq.values[1] == p.eval_derivs(z, 1)[1]);
    }
}

TEST_CASE("D sequence hand expansions") {
    // p = z^2 - 1 at 2: D_2 = p'^2 - p p''/2 = 16 - 3
    const DSequence a = d_sequence(z2m1, {2, 0}, 3);
    CHECK(a.values[0] == Complex{1, 0});
    CHECK(a.values[1] == Complex{4, 0});
    CHECK(a.values[2] == Complex{13, 0});

    // p = z^3 - 1 at 2: D_2 = 144 - 7*6
    const DSequence b = d_sequence(z3m1, {2, 0}, 3);
    CHECK(b.values[1] == Complex{12, 0});
    CHECK(b.values[2] == Complex{102, 0});

    CHECK_THROWS_AS(d_sequence(z2m1, {0, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(d_sequence(Polynomial(std::vector<Complex>{{3, 0}}), {0, 0}, 2), std::invalid_argument);
}

TEST_CASE("B_m hand values: Newton and Halley at z = 2") {
    CHECK(b_m_step(z2m1, {2, 0}, 2) == Complex{1.25, 0});
    CHECK(std::abs(b_m_step(z2m1, {2, 0}, 3) - Complex{14.0 / 13.0, 0}) < 1e-14);
    CHECK(family_direction(z2m1, {2, 0}, 2) == Complex{-0.75, 0});
    CHECK(std::abs(family_direction(z2m1, {2, 0}, 3) - Complex{-12.0 / 13.0, 0}) < 1e-14);
}

TEST_CASE("a root is a fixed point for every order") {
    for (int m = 2; m <= 6; ++m) {
        CHECK(b_m_step(z3m1, {1, 0}, m) == Complex{1, 0});
        CHECK(family_direction(z3m1, {1, 0}, m) == Complex{0, 0});
    }
}

TEST_CASE("b_m_step equals z + family_direction exactly") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial p = random_poly(rng, 8);
        const Complex z{rng.next_in(-4, 4), rng.next_in(-4, 4)};
        const int m = 2 + static_cast<int>(rng.next() % 5);
        try {
            const Complex step = b_m_step(p, z, m);
            CHECK(step == z + family_direction(p, z, m));
        } catch (const DegenerateDenominator&) {
            // fine: both entry points reject the same points
        }
    }
}

TEST_CASE("order 2 is the Newton iterate") {
    SplitMix64 rng(29);
    int checked = 0;
    while (checked < 200) {
        const Polynomial p = random_poly(rng, 8);
        const Complex z{rng.next_in(-4, 4), rng.next_in(-4, 4)};
        const Complex pz = p.eval(z);
        const Complex dpz = p.eval_derivs(z, 1)[1];
        if (std::abs(dpz) < 1e-8) {
            continue;
        }
        const Complex newton = z - pz / dpz;
        try {
            CHECK(std::abs(b_m_step(p, z, 2) - newton) <= 1e-12 * (1.0 + std::abs(z)));
        } catch (const DegenerateDenominator&) {
            continue;
        }
        ++checked;
    }
}

TEST_CASE("B_m(2) walks monotonically into the nearest root of z^3 - 1") {
    // 2 lies strictly inside the Voronoi region of the root 1.
    std::vector<double> err;
    for (int m = 2; m <= 12; ++m) {
        err.push_back(std::abs(b_m_step(z3m1, {2, 0}, m) - Complex{1, 0}));
    }
    for (std::size_t i = 1; i < err.size(); ++i) {
        CHECK(err[i] < err[i - 1]);
    }
    CHECK(err.back() < err.front() / 10.0);
    CHECK(std::abs(b_m_step(z3m1, {2, 0}, 2) - Complex{2.0 - 7.0 / 12.0, 0}) < 1e-14);
    CHECK(std::abs(b_m_step(z3m1, {2, 0}, 3) - Complex{2.0 - 84.0 / 102.0, 0}) < 1e-14);
}

TEST_CASE("Halley step is locally third order on z^2 - 1") {
    const double e1 = std::abs(b_m_step(z2m1, {1.0 + 1e-2, 0}, 3) - Complex{1, 0});
    const double e2 = std::abs(b_m_step(z2m1, {1.0 + 1e-3, 0}, 3) - Complex{1, 0});
    CHECK(e1 <= 1e-6);
    const double slope = std::log(e2 / e1) / std::log(1e-3 / 1e-2);
    CHECK(slope > 2.5);
    CHECK(slope < 3.5);
}

TEST_CASE("degenerate denominator is reported, not silently perturbed") {
    // p' vanishes at 0 for z^2 - 1
    CHECK_THROWS_AS(b_m_step(z2m1, {0, 0}, 2), DegenerateDenominator);
    CHECK_THROWS_AS(family_direction(z2m1, {0, 0}, 2), DegenerateDenominator);
}
