#include "polyellip/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "polyellip/errors.hpp"

namespace polyellip {

namespace {

constexpr int kMaxExponent = 1024;

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const noexcept { return pos >= text.size(); }
    char peek() const noexcept { return done() ? '\0' : text[pos]; }

    void skip_ws() noexcept {
        while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    }

    bool eat(char c) noexcept {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(pos, expected);
    }
};

bool digit(char c) noexcept { return c >= '0' && c <= '9'; }

bool starts_number(const Cursor& c) noexcept {
    const char ch = c.peek();
    if (digit(ch)) {
        return true;
    }
    if (ch == '.' && c.pos + 1 < c.text.size() && digit(c.text[c.pos + 1])) {
        return true;
    }
    return false;
}

// Unsigned real: digits, optional fraction, optional exponent. The exponent
// marker is consumed only when actual exponent digits follow.
double parse_real(Cursor& c) {
    const std::size_t start = c.pos;
    while (digit(c.peek())) {
        ++c.pos;
    }
    if (c.peek() == '.') {
        ++c.pos;
        while (digit(c.peek())) {
            ++c.pos;
        }
    }
    if (c.pos == start || (c.pos == start + 1 && c.text[start] == '.')) {
        c.fail("a number");
    }
    if (c.peek() == 'e' || c.peek() == 'E') {
        std::size_t probe = c.pos + 1;
        if (probe < c.text.size() && (c.text[probe] == '+' || c.text[probe] == '-')) {
            ++probe;
        }
        if (probe < c.text.size() && digit(c.text[probe])) {
            c.pos = probe;
            while (digit(c.peek())) {
                ++c.pos;
            }
        }
    }
    double value = 0.0;
    const char* first = c.text.data() + start;
    const char* last = c.text.data() + c.pos;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(start, "a number");
    }
    return value;
}

int parse_exponent(Cursor& c) {
    if (!digit(c.peek())) {
        c.fail("exponent digits");
    }
    const std::size_t start = c.pos;
    int value = 0;
    while (digit(c.peek())) {
        value = value * 10 + (c.text[c.pos] - '0');
        if (value > kMaxExponent) {
            throw ParseError(start, "an exponent of at most " +
                                        std::to_string(kMaxExponent));
        }
        ++c.pos;
    }
    return value;
}

// '(' real ('+'|'-') real? 'i' ')'
Complex parse_paren_complex(Cursor& c) {
    c.eat('(');
    c.skip_ws();
    double re_sign = 1.0;
    if (c.eat('-')) {
        re_sign = -1.0;
    } else {
        c.eat('+');
    }
    c.skip_ws();
    const double re = re_sign * parse_real(c);
    c.skip_ws();
    double im_sign;
    if (c.eat('+')) {
        im_sign = 1.0;
    } else if (c.eat('-')) {
        im_sign = -1.0;
    } else {
        c.fail("'+' or '-' before the imaginary part");
    }
    c.skip_ws();
    const double im = starts_number(c) ? parse_real(c) : 1.0;
    if (!c.eat('i')) {
        c.fail("'i'");
    }
    c.skip_ws();
    if (!c.eat(')')) {
        c.fail("')'");
    }
    return Complex{re, im_sign * im};
}

struct Term {
    Complex coeff;
    int power;
};

Term parse_term(Cursor& c) {
    c.skip_ws();
    Complex coeff{1.0, 0.0};
    bool saw_coeff = false;

    if (c.peek() == '(') {
        coeff = parse_paren_complex(c);
        saw_coeff = true;
    } else if (starts_number(c)) {
        const double v = parse_real(c);
        if (c.eat('i')) {
            coeff = Complex{0.0, v};
        } else {
            coeff = Complex{v, 0.0};
        }
        saw_coeff = true;
    } else if (c.eat('i')) {
        coeff = Complex{0.0, 1.0};
        saw_coeff = true;
    }

    c.skip_ws();
    const bool saw_star = saw_coeff && c.eat('*');
    if (saw_star) {
        c.skip_ws();
    }

    if (c.peek() == 'z') {
        ++c.pos;
        int power = 1;
        if (c.eat('^')) {
            power = parse_exponent(c);
        }
        return {coeff, power};
    }
    if (saw_star) {
        c.fail("'z' after '*'");
    }
    if (!saw_coeff) {
        c.fail("a coefficient or 'z'");
    }
    return {coeff, 0};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
    Cursor c{text};
    c.skip_ws();
    if (c.done()) {
        c.fail("a polynomial term");
    }

    std::vector<Complex> coeffs;
    double sign = 1.0;
    if (c.eat('-')) {
        sign = -1.0;
    } else {
        c.eat('+');
    }
    while (true) {
        const Term term = parse_term(c);
        if (coeffs.size() <= static_cast<std::size_t>(term.power)) {
            coeffs.resize(static_cast<std::size_t>(term.power) + 1, Complex{0.0, 0.0});
        }
        coeffs[static_cast<std::size_t>(term.power)] += sign * term.coeff;
        c.skip_ws();
        if (c.done()) {
            break;
        }
        if (c.eat('+')) {
            sign = 1.0;
        } else if (c.eat('-')) {
            sign = -1.0;
        } else {
            c.fail("'+' or '-'");
        }
    }
    return Polynomial(std::move(coeffs));
}

Complex parse_complex(std::string_view text) {
    Cursor c{text};
    c.skip_ws();
    if (c.done()) {
        c.fail("a complex literal");
    }
    double sign = 1.0;
    if (c.eat('-')) {
        sign = -1.0;
    } else {
        c.eat('+');
    }

    double value;
    bool imaginary;
    if (c.eat('i')) {
        value = 1.0;
        imaginary = true;
    } else {
        value = parse_real(c);
        imaginary = c.eat('i');
    }

    c.skip_ws();
    if (c.done()) {
        return imaginary ? Complex{0.0, sign * value} : Complex{sign * value, 0.0};
    }
    if (imaginary) {
        c.fail("end of literal after the imaginary part");
    }

    double im_sign;
    if (c.eat('+')) {
        im_sign = 1.0;
    } else if (c.eat('-')) {
        im_sign = -1.0;
    } else {
        c.fail("'+' or '-'");
    }
    c.skip_ws();
    double im;
    if (c.eat('i')) {
        im = 1.0;
    } else {
        im = parse_real(c);
        if (!c.eat('i')) {
            c.fail("'i'");
        }
    }
    c.skip_ws();
    if (!c.done()) {
        c.fail("end of literal");
    }
    return Complex{sign * value, im_sign * im};
}

std::string to_string(const Polynomial& p) {
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Complex a = p.coeffs()[static_cast<std::size_t>(k)];
        if (a.real() == 0.0 && a.imag() == 0.0) {
            continue;
        }
        const bool first = out.empty();
        std::string body;
        if (a.imag() == 0.0) {
            const bool neg = a.real() < 0.0;
            out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            const double mag = std::fabs(a.real());
            if (k == 0 || mag != 1.0) {
                body = fmt(mag);
            }
        } else if (a.real() == 0.0) {
            const bool neg = a.imag() < 0.0;
            out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            const double mag = std::fabs(a.imag());
            if (mag != 1.0) {
                body = fmt(mag);
            }
            body += "i";
        } else {
            out += first ? "" : " + ";
            body = "(" + fmt(a.real()) + (a.imag() < 0.0 ? "-" : "+") +
                   fmt(std::fabs(a.imag())) + "i)";
        }
        out += body;
        if (k >= 1) {
            out += "z";
            if (k >= 2) {
                out += "^" + std::to_string(k);
            }
        }
    }
    if (out.empty()) {
        out = "0";
    }
    return out;
}

std::string format_complex(Complex c) {
    return fmt(c.real()) + (c.imag() < 0.0 ? "-" : "+") + fmt(std::fabs(c.imag())) +
           "i";
}

}  // namespace polyellip
