#ifndef POLYELLIP_SPLITMIX_HPP
#define POLYELLIP_SPLITMIX_HPP

#include <cstdint>

#include "polyellip/polynomial.hpp"
#include "polyellip/root_bounds.hpp"

namespace polyellip {

/**
 * SplitMix64 generator (Steele, Lea & Flood; as published in Vigna's
 * reference implementation). Fixed constants make every draw reproducible
 * from the seed in any language:
 *
 *   state += 0x9E3779B97F4A7C15
 *   z = state
 *   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *   return z ^ (z >> 31)
 *
 * Doubles in [0, 1) take the top 53 bits: (z >> 11) * 2^-53.
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_double() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double next_in(double lo, double hi) noexcept {
        return lo + next_double() * (hi - lo);
    }

    /// Uniform point in a rectangle; real part drawn first.
    Complex next_in_rect(const Rect& r) noexcept {
        const double x = next_in(r.x_lo, r.x_hi);
        const double y = next_in(r.y_lo, r.y_hi);
        return Complex{x, y};
    }

private:
    std::uint64_t state_;
};

}  // namespace polyellip

#endif  // POLYELLIP_SPLITMIX_HPP
