#include "polyellip/basic_family.hpp"

#include <cmath>
#include <stdexcept>

#include "polyellip/errors.hpp"

namespace polyellip {

DSequence d_sequence(const Polynomial& p, Complex z, int m) {
    if (m < 2) {
        throw std::invalid_argument("basic family order must be at least 2");
    }
    if (p.degree() < 1) {
        throw std::invalid_argument("basic family needs degree >= 1");
    }
    const int n = p.degree();
    const int top = std::min(n, m - 1);
    const std::vector<Complex> derivs = p.eval_derivs(z, top);
    const Complex pz = derivs[0];

    DSequence seq;
    seq.order = m;
    seq.point = z;
    seq.values.assign(static_cast<std::size_t>(m), Complex{0.0, 0.0});
    seq.values[0] = Complex{1.0, 0.0};

    for (int j = 1; j <= m - 1; ++j) {
        Complex acc{0.0, 0.0};
        Complex p_pow{1.0, 0.0};  // p(z)^{i-1}
        double factorial = 1.0;   // i!
        double sign = 1.0;        // (-1)^{i-1}
        const int limit = std::min(top, j);
        for (int i = 1; i <= limit; ++i) {
            factorial *= static_cast<double>(i);
            acc += sign * p_pow * (derivs[static_cast<std::size_t>(i)] / factorial) *
                   seq.values[static_cast<std::size_t>(j - i)];
            p_pow *= pz;
            sign = -sign;
        }
        seq.values[static_cast<std::size_t>(j)] = acc;
    }
    return seq;
}

Complex family_direction(const Polynomial& p, Complex z, int m) {
    const DSequence seq = d_sequence(p, z, m);
    const Complex pz = p.eval(z);
    const Complex num = pz * seq.values[static_cast<std::size_t>(m - 2)];
    const Complex den = seq.values[static_cast<std::size_t>(m - 1)];
    if (std::abs(den) < 1e-14 * (1.0 + std::abs(num))) {
        throw DegenerateDenominator("D_{m-1} vanishes at this point");
    }
    return -(num / den);
}

Complex b_m_step(const Polynomial& p, Complex z, int m) {
    return z + family_direction(p, z, m);
}

}  // namespace polyellip
