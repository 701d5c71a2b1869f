#ifndef POLYELLIP_EXPR_HPP
#define POLYELLIP_EXPR_HPP

#include <string>
#include <string_view>

#include "polyellip/polynomial.hpp"

namespace polyellip {

/**
 * Parses a polynomial expression in the variable z.
 *
 *   expr  := ('+' | '-')? term (('+' | '-') term)*
 *   term  := coeff '*'? zpart | coeff | zpart
 *   zpart := 'z' ('^' uint)?
 *   coeff := real | imag | '(' real ('+' | '-') imag ')'
 *   imag  := real? 'i'
 *
 * Whitespace is ignored and repeated powers accumulate by addition, so
 * "z^3-2z+2" and "(1+2i)z^2 - i" mean what they look like. Throws ParseError
 * carrying the byte offset and the expected token on malformed input.
 */
Polynomial parse_polynomial(std::string_view text);

/// Complex literal: "2", "-1.5", "i", "2i", "1+2i", "1.5-0.5i".
Complex parse_complex(std::string_view text);

/// Renders descending by power with 17 significant digits;
/// parse_polynomial(to_string(p)) reproduces p coefficient-exactly.
std::string to_string(const Polynomial& p);

/// "a+bi" with 17 significant digits, both components always present.
std::string format_complex(Complex c);

}  // namespace polyellip

#endif  // POLYELLIP_EXPR_HPP
