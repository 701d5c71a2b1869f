#include "polyellip/polynomial.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace polyellip {

namespace {

bool is_finite(Complex c) noexcept {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

bool is_exact_zero(Complex c) noexcept {
    return c.real() == 0.0 && c.imag() == 0.0;
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("polynomial needs at least one coefficient");
    }
    for (const Complex& c : coeffs_) {
        if (!is_finite(c)) {
            throw std::invalid_argument("polynomial coefficients must be finite");
        }
    }
    // Exact-zero trim only; near-zero leading coefficients are the caller's
    // responsibility.
    while (coeffs_.size() > 1 && is_exact_zero(coeffs_.back())) {
        coeffs_.pop_back();
    }
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots) {
    if (roots.empty()) {
        throw std::invalid_argument("from_roots needs at least one root");
    }
    std::vector<Complex> c{Complex{1.0, 0.0}};
    c.reserve(roots.size() + 1);
    for (const Complex& r : roots) {
        c.push_back(Complex{0.0, 0.0});
        for (std::size_t i = c.size() - 1; i > 0; --i) {
            c[i] = c[i - 1] - r * c[i];
        }
        c[0] = -r * c[0];
    }
    return Polynomial(std::move(c));
}

Complex Polynomial::eval(Complex z) const noexcept {
    Complex acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        acc = acc * z + coeffs_[i];
    }
    return acc;
}

std::vector<Complex> Polynomial::eval_derivs(Complex z, int k) const {
    if (k < 0) {
        throw std::invalid_argument("derivative count must be non-negative");
    }
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(k) + 1);
    out.push_back(eval(z));

    std::vector<Complex> work = coeffs_;
    for (int j = 1; j <= k; ++j) {
        if (work.size() <= 1) {
            out.push_back(Complex{0.0, 0.0});
            continue;
        }
        for (std::size_t i = 1; i < work.size(); ++i) {
            work[i - 1] = static_cast<double>(i) * work[i];
        }
        work.pop_back();
        Complex acc = work.back();
        for (std::size_t i = work.size() - 1; i-- > 0;) {
            acc = acc * z + work[i];
        }
        out.push_back(acc);
    }
    return out;
}

Polynomial Polynomial::derivative() const {
    if (degree() == 0) {
        return Polynomial({Complex{0.0, 0.0}});
    }
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = static_cast<double>(i) * coeffs_[i];
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::deflate(Complex root) const {
    if (degree() < 1) {
        throw std::invalid_argument("cannot deflate a constant polynomial");
    }
    const int n = degree();
    std::vector<Complex> q(static_cast<std::size_t>(n));
    q[static_cast<std::size_t>(n - 1)] = coeffs_[static_cast<std::size_t>(n)];
    for (int i = n - 1; i >= 1; --i) {
        q[static_cast<std::size_t>(i - 1)] =
            coeffs_[static_cast<std::size_t>(i)] + root * q[static_cast<std::size_t>(i)];
    }
    return Polynomial(std::move(q));
}

}  // namespace polyellip
