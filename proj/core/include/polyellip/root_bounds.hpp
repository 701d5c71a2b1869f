#ifndef POLYELLIP_ROOT_BOUNDS_HPP
#define POLYELLIP_ROOT_BOUNDS_HPP

#include "polyellip/polynomial.hpp"

namespace polyellip {

/// Axis-aligned rectangle in the complex plane. Invariant: x_lo < x_hi and
/// y_lo < y_hi.
struct Rect {
    double x_lo;
    double y_lo;
    double x_hi;
    double y_hi;

    double width() const noexcept { return x_hi - x_lo; }
    double height() const noexcept { return y_hi - y_lo; }
    bool contains(Complex z) const noexcept {
        return z.real() >= x_lo && z.real() <= x_hi && z.imag() >= y_lo &&
               z.imag() <= y_hi;
    }
};

/// The unique positive root r_m of t^{m-1} + t - 1, found by bisection on
/// [0.5, 1) to absolute tolerance 1e-14. r_2 = 0.5 exactly, r_3 ~ 0.618034,
/// r_4 ~ 0.682328, and r_m increases toward 1.
double radical(int m);

/// A priori upper bound on the modulus of every zero of p, of order
/// m in {2, 3, 4}. Higher orders use small determinants of the top
/// coefficients; coefficient subscripts below zero read as zero.
double bound(const Polynomial& p, int m);

/// Tightest of the three bounds above.
double best_bound(const Polynomial& p);

/// Square [-rho, rho] x [-rho, rho] with rho = best_bound(p); contains every
/// zero of p. A degenerate zero bound (all roots at the origin) is widened to
/// a small positive half-width so the rectangle stays well-formed.
Rect bounding_square(const Polynomial& p);

}  // namespace polyellip

#endif  // POLYELLIP_ROOT_BOUNDS_HPP
