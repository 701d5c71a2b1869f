#ifndef POLYELLIP_POLYNOMIAL_HPP
#define POLYELLIP_POLYNOMIAL_HPP

#include <complex>
#include <span>
#include <vector>

namespace polyellip {

using Complex = std::complex<double>;

/**
 * Univariate polynomial with complex coefficients.
 *
 * Coefficients are stored in ascending order of power: coeffs()[i] is the
 * coefficient of z^i. Trailing zero coefficients (exact zeros, both
 * components) are trimmed on construction, so the leading coefficient of any
 * polynomial of degree >= 1 is nonzero. All coefficients must be finite.
 *
 * Instances are immutable values; every member function is const and
 * reentrant.
 */
class Polynomial {
public:
    /// Builds a polynomial from ascending-power coefficients.
    /// Throws std::invalid_argument on empty input or non-finite entries.
    explicit Polynomial(std::vector<Complex> ascending_coeffs);

    /// Monic polynomial with exactly the given zeros (with multiplicity).
    static Polynomial from_roots(std::span<const Complex> roots);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of z^i, reading indices outside [0, degree] as zero.
    Complex coeff_or_zero(int i) const noexcept {
        return (i >= 0 && i <= degree()) ? coeffs_[static_cast<std::size_t>(i)]
                                         : Complex{0.0, 0.0};
    }
    Complex leading() const noexcept { return coeffs_.back(); }

    /// Horner evaluation, one pass over the coefficients.
    Complex eval(Complex z) const noexcept;

    /// Values (p(z), p'(z), ..., p^(k)(z)). Entries beyond the degree are
    /// exact zeros. Entry 1 is computed by Horner on the derivative
    /// coefficients i*a_i, in that exact arithmetic order.
    std::vector<Complex> eval_derivs(Complex z, int k) const;

    /// Derivative polynomial, coefficients i*a_i.
    Polynomial derivative() const;

    /// Synthetic division by (z - root), remainder discarded. The caller is
    /// responsible for only deflating at points where |p(root)| is small.
    /// Throws std::invalid_argument for degree-0 input.
    Polynomial deflate(Complex root) const;

    bool operator==(const Polynomial& other) const noexcept {
        return coeffs_ == other.coeffs_;
    }

private:
    std::vector<Complex> coeffs_;
};

}  // namespace polyellip

#endif  // POLYELLIP_POLYNOMIAL_HPP
