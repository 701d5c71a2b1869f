#ifndef POLYELLIP_BASIC_FAMILY_HPP
#define POLYELLIP_BASIC_FAMILY_HPP

#include <vector>

#include "polyellip/polynomial.hpp"

namespace polyellip {

/**
 * The determinantal sequence D_0(z), ..., D_{m-1}(z) behind the basic family
 * of iteration functions, evaluated at a point.
 *
 * D_0(z) = 1, D_k(z) = 0 for k < 0, and
 *
 *   D_m(z) = sum_{i=1}^{n} (-1)^{i-1} p(z)^{i-1} (p^(i)(z) / i!) D_{m-i}(z),
 *
 * where n is the degree of p. Terms with i > m-1 vanish through D_{k<0} = 0
 * and terms with i > n vanish through p^(i) = 0, so the sum effectively runs
 * over i = 1 ... min(n, m).
 */
struct DSequence {
    int order;                    // m >= 2
    Complex point;                // z
    std::vector<Complex> values;  // D_0(z) ... D_{m-1}(z)
};

/// Computes D_0 ... D_{m-1} bottom-up. Requires m >= 2 and degree(p) >= 1.
DSequence d_sequence(const Polynomial& p, Complex z, int m);

/// One step of the order-m member of the basic family:
///   B_m(z) = z - p(z) D_{m-2}(z) / D_{m-1}(z).
/// B_2 is the Newton iterate, B_3 the Halley iterate. Throws
/// DegenerateDenominator when |D_{m-1}(z)| < 1e-14 * (1 + |D_{m-2}(z) p(z)|).
Complex b_m_step(const Polynomial& p, Complex z, int m);

/// The order-m basic family direction -p(z) D_{m-2}(z) / D_{m-1}(z).
/// The identity b_m_step(p, z, m) == z + family_direction(p, z, m) is exact.
Complex family_direction(const Polynomial& p, Complex z, int m);

}  // namespace polyellip

#endif  // POLYELLIP_BASIC_FAMILY_HPP
