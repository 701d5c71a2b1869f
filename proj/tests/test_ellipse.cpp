#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polyellip/ellipse.hpp"
#include "polyellip/errors.hpp"
#include "polyellip/splitmix.hpp"

using polyellip::Complex;
using polyellip::CutNormal;
using polyellip::DegenerateNormal;
using polyellip::Ellipse2;
using polyellip::initial_disk;
using polyellip::Rect;
using polyellip::SplitMix64;

namespace {

const double kAreaRatio = 4.0 / (3.0 * std::sqrt(3.0));

// Principal square root of the shape matrix, for uniform sampling inside an
// ellipse: B^{1/2} = (B + sqrt(det) I) / sqrt(trace + 2 sqrt(det)).
struct SqrtShape {
    double s11, s12, s22;

    explicit SqrtShape(const Ellipse2& e) {
        const double s = std::sqrt(e.det());
        const double t = std::sqrt(e.b11() + e.b22() + 2.0 * s);
        s11 = (e.b11() + s) / t;
        s12 = e.b12() / t;
        s22 = (e.b22() + s) / t;
    }

    Complex apply(double ux, double uy) const {
        return {s11 * ux + s12 * uy, s12 * ux + s22 * uy};
    }
};

Ellipse2 random_ellipse(SplitMix64& rng) {
    const double a = rng.next_in(-2, 2);
    const double b = rng.next_in(-2, 2);
    const double c = rng.next_in(-2, 2);
    const double d = rng.next_in(-2, 2);
    // A A^T + 0.05 I is symmetric positive definite
    return Ellipse2({rng.next_in(-3, 3), rng.next_in(-3, 3)},
                    a * a + b * b + 0.05, a * c + b * d, c * c + d * d + 0.05);
}

CutNormal random_normal(SplitMix64& rng) {
    while (true) {
        const double x = rng.next_in(-1, 1);
        const double y = rng.next_in(-1, 1);
        const double n = std::hypot(x, y);
        if (n > 0.1) {
            return {x / n, y / n};
        }
    }
}

}  // namespace

TEST_CASE("membership on the unit disk") {
    const Ellipse2 disk = Ellipse2::disk({0, 0}, 1.0);
    CHECK(disk.contains({1, 0}));        // boundary counts as inside
    CHECK(!disk.contains({1.1, 0}));
    CHECK(disk.contains({0.3, -0.4}));
    CHECK(disk.area() == doctest::Approx(std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("disk area scales with the radius squared") {
    for (const double r : {0.25, 1.0, 3.5}) {
        const Ellipse2 d = Ellipse2::disk({1, -2}, r);
        CHECK(d.area() == doctest::Approx(std::numbers::pi * r * r).epsilon(1e-13));
    }
}

TEST_CASE("cut of the unit disk along +x") {
    const Ellipse2 disk = Ellipse2::disk({0, 0}, 1.0);
    const Ellipse2 cut = disk.cut({1, 0});
    CHECK(std::abs(cut.center().real() + 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(cut.center().imag()) < 1e-15);
    CHECK(std::abs(cut.b11() - 4.0 / 9.0) < 1e-15);
    CHECK(std::abs(cut.b12()) < 1e-15);
    CHECK(std::abs(cut.b22() - 4.0 / 3.0) < 1e-15);
    // the point (0, 1) lands exactly on the new boundary
    CHECK(cut.contains({0, 1}));
    CHECK(cut.area() / disk.area() == doctest::Approx(kAreaRatio).epsilon(1e-12));

    const Ellipse2 cut_y = disk.cut({0, 1});
    CHECK(std::abs(cut_y.center().imag() + 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(cut_y.b11() - 4.0 / 3.0) < 1e-15);
    CHECK(std::abs(cut_y.b22() - 4.0 / 9.0) < 1e-15);
}

TEST_CASE("cut area ratio is the fixed constant, below the k=2 bound") {
    CHECK(kAreaRatio < std::exp(-1.0 / 6.0));  // paper's rho_2 ~ .85
    SplitMix64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Ellipse2 e = random_ellipse(rng);
        const Ellipse2 after = e.cut(random_normal(rng));
        CHECK(std::abs(after.area() / e.area() - kAreaRatio) < 1e-10);
    }
    for (const double r : {0.5, 2.0, 7.0}) {
        const Ellipse2 d = Ellipse2::disk({0, 0}, r);
        CHECK(d.cut({1, 0}).area() ==
              doctest::Approx(kAreaRatio * std::numbers::pi * r * r).epsilon(1e-10));
    }
}

TEST_CASE("the cut ellipse contains the kept half-ellipse") {
    SplitMix64 rng(7);
    for (int instance = 0; instance < 100; ++instance) {
        const Ellipse2 e = random_ellipse(rng);
        const CutNormal a = random_normal(rng);
        const Ellipse2 after = e.cut(a);
        const SqrtShape half(e);
        int kept = 0;
        while (kept < 500) {
            const double ux = rng.next_in(-1, 1);
            const double uy = rng.next_in(-1, 1);
            if (ux * ux + uy * uy > 1.0) {
                continue;
            }
            const Complex x = e.center() + half.apply(ux, uy);
            const double side = a.x * (x.real() - e.center().real()) +
                                a.y * (x.imag() - e.center().imag());
            if (side > 0.0) {
                continue;
            }
            ++kept;
            CHECK(after.contains(x));
        }
    }
}

TEST_CASE("500 successive cuts keep the shape matrix well-formed") {
    SplitMix64 rng(13);
    Ellipse2 e = Ellipse2::disk({0, 0}, 1.0);
    for (int i = 0; i < 500; ++i) {
        if (e.det() < 1e-280) {  // the solver's conditioning guard
            e = Ellipse2::disk({0, 0}, 1.0);
        }
        e = e.cut(random_normal(rng));
        CHECK(e.det() > 0.0);
        CHECK(e.b11() + e.b22() > 0.0);
        CHECK(std::isfinite(e.b12()));
    }
}

TEST_CASE("initial disk reaches the farthest corner") {
    const Rect r{-4, -4, 4, 4};
    const Ellipse2 d0 = initial_disk(r, {0, 0});
    CHECK(d0.b11() == doctest::Approx(32.0).epsilon(1e-14));
    CHECK(d0.b22() == doctest::Approx(32.0).epsilon(1e-14));
    CHECK(d0.b12() == 0.0);

    const Ellipse2 d1 = initial_disk(r, {4, 4});
    CHECK(d1.b11() == doctest::Approx(128.0).epsilon(1e-14));

    const Rect unit{-1, -1, 1, 1};
    const Ellipse2 d2 = initial_disk(unit, {0, 0});
    CHECK(d2.contains({1, 1}));
    CHECK(d2.contains({-1, 1}));
}

TEST_CASE("degenerate inputs are rejected") {
    const Ellipse2 disk = Ellipse2::disk({0, 0}, 1.0);
    CHECK_THROWS_AS(disk.cut({0, 0}), DegenerateNormal);
    CHECK_THROWS_AS(Ellipse2({0, 0}, 1.0, 2.0, 1.0), std::invalid_argument);   // det < 0
    CHECK_THROWS_AS(Ellipse2({0, 0}, -1.0, 0.0, -1.0), std::invalid_argument); // trace < 0
}

TEST_CASE("constructor symmetrizes an asymmetric off-diagonal pair") {
    const Ellipse2 e({0, 0}, 2.0, 0.1, 0.3, 2.0);
    CHECK(e.b12() == doctest::Approx(0.2).epsilon(1e-15));
}
