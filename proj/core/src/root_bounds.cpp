#include "polyellip/root_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyellip {

namespace {

double radical_residual(double t, int m) {
    return std::pow(t, m - 1) + t - 1.0;
}

// |x|^(1/(k-1)) on the modulus, no complex branch needed.
double abs_root(Complex x, int k) {
    const double mag = std::abs(x);
    if (mag == 0.0) {
        return 0.0;
    }
    return std::pow(mag, 1.0 / static_cast<double>(k - 1));
}

double bound_m2(const Polynomial& p) {
    const int n = p.degree();
    const Complex an = p.leading();
    double best = 0.0;
    for (int k = 2; k <= n + 1; ++k) {
        best = std::max(best, abs_root(p.coeff_or_zero(n - k + 1) / an, k));
    }
    return best / radical(2);
}

double bound_m3(const Polynomial& p) {
    const int n = p.degree();
    const Complex an = p.leading();
    const Complex an1 = p.coeff_or_zero(n - 1);
    const Complex an_sq = an * an;
    double best = 0.0;
    for (int k = 3; k <= n + 2; ++k) {
        // det of [[a_{n-1}, a_{n-k+1}], [a_n, a_{n-k+2}]]
        const Complex det =
            an1 * p.coeff_or_zero(n - k + 2) - an * p.coeff_or_zero(n - k + 1);
        best = std::max(best, abs_root(det / an_sq, k));
    }
    return best / radical(3);
}

double bound_m4(const Polynomial& p) {
    const int n = p.degree();
    const Complex an = p.leading();
    const Complex an1 = p.coeff_or_zero(n - 1);
    const Complex an2 = p.coeff_or_zero(n - 2);
    const Complex an_cu = an * an * an;
    double best = 0.0;
    for (int k = 4; k <= n + 3; ++k) {
        const Complex c1 = p.coeff_or_zero(n - k + 1);
        const Complex c2 = p.coeff_or_zero(n - k + 2);
        const Complex c3 = p.coeff_or_zero(n - k + 3);
        // det of [[a_{n-1}, a_{n-2}, c1], [a_n, a_{n-1}, c2], [0, a_n, c3]]
        const Complex det =
            an1 * (an1 * c3 - an * c2) - an2 * (an * c3) + c1 * (an * an);
        best = std::max(best, abs_root(det / an_cu, k));
    }
    return best / radical(4);
}

}  // namespace

double radical(int m) {
    if (m < 2) {
        throw std::invalid_argument("radical order must be at least 2");
    }
    double lo = 0.5;
    double hi = 1.0;
    const double f_lo = radical_residual(lo, m);
    if (f_lo == 0.0) {
        return lo;
    }
    // f(0.5) < 0 < f(1) for m > 2; bisect to 1e-14.
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        if (radical_residual(mid, m) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double bound(const Polynomial& p, int m) {
    if (p.degree() < 1) {
        throw std::invalid_argument("root bounds need degree >= 1");
    }
    switch (m) {
        case 2:
            return bound_m2(p);
        case 3:
            return bound_m3(p);
        case 4:
            return bound_m4(p);
        default:
            throw std::invalid_argument("bound order must be 2, 3 or 4");
    }
}

double best_bound(const Polynomial& p) {
    return std::min({bound(p, 2), bound(p, 3), bound(p, 4)});
}

Rect bounding_square(const Polynomial& p) {
    // All roots at the origin give rho = 0; keep the square non-degenerate.
    const double rho = std::max(best_bound(p), 1e-6);
    return Rect{-rho, -rho, rho, rho};
}

}  // namespace polyellip
