#ifndef POLYELLIP_ELLIPSE_HPP
#define POLYELLIP_ELLIPSE_HPP

#include "polyellip/polynomial.hpp"
#include "polyellip/root_bounds.hpp"

namespace polyellip {

/// Normal of a central-cut half-space, the real/imaginary parts of a complex
/// direction (typically p(z)/p'(z)). The half-space kept by a cut is
/// {x : a . (x - c) <= 0} under the real inner product.
struct CutNormal {
    double x;
    double y;

    static CutNormal from(Complex a) noexcept { return {a.real(), a.imag()}; }
    double norm() const noexcept;
};

/**
 * Ellipse E(B, c) = { x in R^2 : (x - c)^T B^{-1} (x - c) <= 1 } with center
 * c and symmetric positive-definite shape matrix B. The complex plane is
 * identified with R^2, so centers and query points are Complex values.
 *
 * B is stored as its three distinct entries, so it is symmetric by
 * construction; the (b11, b12, b21, b22) constructor averages the
 * off-diagonal pair. Positive definiteness (det > 0, trace > 0) is checked
 * on construction.
 */
class Ellipse2 {
public:
    Ellipse2(Complex center, double b11, double b12, double b21, double b22);
    Ellipse2(Complex center, double b11, double b12, double b22);

    /// Disk of the given radius: B = r^2 I.
    static Ellipse2 disk(Complex center, double radius);

    Complex center() const noexcept { return center_; }
    double b11() const noexcept { return b11_; }
    double b12() const noexcept { return b12_; }
    double b22() const noexcept { return b22_; }

    double det() const noexcept { return b11_ * b22_ - b12_ * b12_; }
    double area() const noexcept;

    /// Closed membership test with additive tolerance 1e-12; boundary points
    /// count as inside. Uses the closed-form 2x2 inverse of B.
    bool contains(Complex point) const noexcept;

    /// Least-area ellipse containing the half-ellipse cut off by the
    /// half-space {x : a . (x - center) <= 0}:
    ///
    ///   c' = c - B a / (3 sqrt(a^T B a)),
    ///   B' = (4/3) (B - 2 (B a)(B a)^T / (3 a^T B a)).
    ///
    /// The area shrinks by the constant factor 4/(3 sqrt(3)) ~ 0.7698.
    /// Throws DegenerateNormal when |a| < 1e-300.
    Ellipse2 cut(const CutNormal& a) const;

private:
    Complex center_;
    double b11_;
    double b12_;
    double b22_;
};

/// Smallest disk centered at z0 that covers the rectangle: radius is the
/// distance from z0 to the farthest of the four corners.
Ellipse2 initial_disk(const Rect& rect, Complex z0);

}  // namespace polyellip

#endif  // POLYELLIP_ELLIPSE_HPP
