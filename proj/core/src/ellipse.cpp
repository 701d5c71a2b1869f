#include "polyellip/ellipse.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polyellip/errors.hpp"

namespace polyellip {

double CutNormal::norm() const noexcept { return std::hypot(x, y); }

Ellipse2::Ellipse2(Complex center, double b11, double b12, double b21, double b22)
    : Ellipse2(center, b11, 0.5 * (b12 + b21), b22) {}

Ellipse2::Ellipse2(Complex center, double b11, double b12, double b22)
    : center_(center), b11_(b11), b12_(b12), b22_(b22) {
    if (!(std::isfinite(b11_) && std::isfinite(b12_) && std::isfinite(b22_)) ||
        !(std::isfinite(center_.real()) && std::isfinite(center_.imag()))) {
        throw std::invalid_argument("ellipse entries must be finite");
    }
    if (!(det() > 0.0) || !(b11_ + b22_ > 0.0)) {
        throw std::invalid_argument("ellipse shape matrix must be positive definite");
    }
}

Ellipse2 Ellipse2::disk(Complex center, double radius) {
    const double r2 = radius * radius;
    return Ellipse2(center, r2, 0.0, r2);
}

double Ellipse2::area() const noexcept { return std::numbers::pi * std::sqrt(det()); }

bool Ellipse2::contains(Complex point) const noexcept {
    const double dx = point.real() - center_.real();
    const double dy = point.imag() - center_.imag();
    // B^{-1} = (1/det) [[b22, -b12], [-b12, b11]]
    const double q =
        (b22_ * dx * dx - 2.0 * b12_ * dx * dy + b11_ * dy * dy) / det();
    return q <= 1.0 + 1e-12;
}

Ellipse2 Ellipse2::cut(const CutNormal& a) const {
    if (a.norm() < 1e-300) {
        throw DegenerateNormal("cut normal underflowed to zero");
    }
    const double bax = b11_ * a.x + b12_ * a.y;
    const double bay = b12_ * a.x + b22_ * a.y;
    const double quad = a.x * bax + a.y * bay;  // a^T B a > 0 by definiteness
    const double scale = 3.0 * std::sqrt(quad);
    const Complex new_center{center_.real() - bax / scale,
                             center_.imag() - bay / scale};
    const double f = 2.0 / (3.0 * quad);
    const double nb11 = (4.0 / 3.0) * (b11_ - f * bax * bax);
    const double nb12 = (4.0 / 3.0) * (b12_ - f * bax * bay);
    const double nb22 = (4.0 / 3.0) * (b22_ - f * bay * bay);
    return Ellipse2(new_center, nb11, nb12, nb22);
}

Ellipse2 initial_disk(const Rect& rect, Complex z0) {
    if (!(std::isfinite(z0.real()) && std::isfinite(z0.imag()))) {
        throw std::invalid_argument("initial disk center must be finite");
    }
    double r = 0.0;
    for (const double cx : {rect.x_lo, rect.x_hi}) {
        for (const double cy : {rect.y_lo, rect.y_hi}) {
            r = std::max(r, std::hypot(cx - z0.real(), cy - z0.imag()));
        }
    }
    return Ellipse2::disk(z0, r);
}

}  // namespace polyellip
