#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "polyellip/errors.hpp"
#include "polyellip/expr.hpp"
#include "polyellip/splitmix.hpp"

using polyellip::Complex;
using polyellip::format_complex;
using polyellip::parse_complex;
using polyellip::parse_polynomial;
using polyellip::ParseError;
using polyellip::Polynomial;
using polyellip::SplitMix64;
using polyellip::to_string;

TEST_CASE("classic test polynomials parse to the right coefficients") {
    const Polynomial smale = parse_polynomial("z^3-2z+2");
    REQUIRE(smale.degree() == 3);
    CHECK(smale.coeffs()[0] == Complex{2, 0});
    CHECK(smale.coeffs()[1] == Complex{-2, 0});
    CHECK(smale.coeffs()[2] == Complex{0, 0});
    CHECK(smale.coeffs()[3] == Complex{1, 0});

    const Polynomial quad = parse_polynomial("z^2-1");
    REQUIRE(quad.degree() == 2);
    CHECK(quad.coeffs()[0] == Complex{-1, 0});
    CHECK(quad.coeffs()[2] == Complex{1, 0});

    const Polynomial cplx = parse_polynomial("(1+2i)z^2 - i");
    REQUIRE(cplx.degree() == 2);
    CHECK(cplx.coeffs()[2] == Complex{1, 2});
    CHECK(cplx.coeffs()[1] == Complex{0, 0});
    CHECK(cplx.coeffs()[0] == Complex{0, -1});
}

TEST_CASE("grammar corners") {
    CHECK(parse_polynomial("2*z^3").coeffs()[3] == Complex{2, 0});
    CHECK(parse_polynomial("2 z").coeffs()[1] == Complex{2, 0});
    CHECK(parse_polynomial("iz^2").coeffs()[2] == Complex{0, 1});
    CHECK(parse_polynomial("3i").coeffs()[0] == Complex{0, 3});
    CHECK(parse_polynomial("-z^2+1").coeffs()[2] == Complex{-1, 0});
    CHECK(parse_polynomial("z + z").coeffs()[1] == Complex{2, 0});  // accumulation
    CHECK(parse_polynomial("1e-2z").coeffs()[1] == Complex{0.01, 0});
    CHECK(parse_polynomial("(1.5-0.5i)z").coeffs()[1] == Complex{1.5, -0.5});
    CHECK(parse_polynomial("(-2+i)z").coeffs()[1] == Complex{-2, 1});
    CHECK(parse_polynomial("0").degree() == 0);
    CHECK(parse_polynomial("z^2 - z^2").degree() == 0);  // cancels to zero
}

TEST_CASE("parse errors carry the byte offset of the problem") {
    const auto offset_of = [](const std::string& text) -> std::size_t {
        try {
            (void)parse_polynomial(text);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return static_cast<std::size_t>(-1);
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("   ") == 3);
    CHECK(offset_of("z^") == 2);
    CHECK(offset_of("z^x") == 2);
    CHECK(offset_of("z$1") == 1);
    CHECK(offset_of("2+") == 2);
    CHECK(offset_of("(1+2i") == 5);
    CHECK(offset_of("(1)z") == 2);
    CHECK(offset_of("2*3") == 2);
    CHECK(offset_of("z^--1") == 2);
    CHECK(offset_of("z^99999") == 2);  // exponent cap

    try {
        (void)parse_polynomial("z^");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
        CHECK(!e.expected().empty());
    }
}

TEST_CASE("print-parse round trip is coefficient-exact") {
    SplitMix64 rng(83);
    for (int trial = 0; trial < 200; ++trial) {
        const int degree = static_cast<int>(rng.next() % 9);
        std::vector<Complex> coeffs;
        for (int i = 0; i <= degree; ++i) {
            // mix of zero, pure-real, pure-imaginary, unit and generic entries
            switch (rng.next() % 6) {
                case 0:
                    coeffs.push_back({0, 0});
                    break;
                case 1:
                    coeffs.push_back({rng.next_in(-9, 9), 0});
                    break;
                case 2:
                    coeffs.push_back({0, rng.next_in(-9, 9)});
                    break;
                case 3:
                    coeffs.push_back({rng.next() % 2 ? 1.0 : -1.0, 0});
                    break;
                case 4:
                    coeffs.push_back({rng.next_in(-1e-6, 1e-6), rng.next_in(1e5, 1e7)});
                    break;
                default:
                    coeffs.push_back({rng.next_in(-9, 9), rng.next_in(-9, 9)});
                    break;
            }
        }
        if (coeffs.back() == Complex{0, 0}) {
            coeffs.back() = Complex{1, 0};
        }
        const Polynomial p(coeffs);
        const Polynomial q = parse_polynomial(to_string(p));
        REQUIRE(q.degree() == p.degree());
        for (int i = 0; i <= p.degree(); ++i) {
            CHECK(q.coeffs()[i] == p.coeffs()[i]);
        }
    }
}

TEST_CASE("printer layout samples") {
    CHECK(to_string(parse_polynomial("z^3-2z+2")) == "z^3 - 2z + 2");
    CHECK(to_string(parse_polynomial("z^2-1")) == "z^2 - 1");
    CHECK(to_string(parse_polynomial("-z")) == "-z");
    CHECK(to_string(parse_polynomial("0")) == "0");
    CHECK(to_string(parse_polynomial("(1+2i)z^2-i")) == "(1+2i)z^2 - i");
    CHECK(to_string(parse_polynomial("2.5i z")) == "2.5iz");
}

TEST_CASE("complex literals for the command line") {
    CHECK(parse_complex("2") == Complex{2, 0});
    CHECK(parse_complex("-1.5") == Complex{-1.5, 0});
    CHECK(parse_complex("i") == Complex{0, 1});
    CHECK(parse_complex("-i") == Complex{0, -1});
    CHECK(parse_complex("2i") == Complex{0, 2});
    CHECK(parse_complex("1+2i") == Complex{1, 2});
    CHECK(parse_complex("1.5-0.5i") == Complex{1.5, -0.5});
    CHECK(parse_complex("2+2i") == Complex{2, 2});
    CHECK(parse_complex("3-i") == Complex{3, -1});
    CHECK_THROWS_AS(parse_complex(""), ParseError);
    CHECK_THROWS_AS(parse_complex("2+"), ParseError);
    CHECK_THROWS_AS(parse_complex("2i+1"), ParseError);
    CHECK_THROWS_AS(parse_complex("1+2"), ParseError);
}

TEST_CASE("format_complex round-trips through parse_complex") {
    SplitMix64 rng(97);
    for (int trial = 0; trial < 100; ++trial) {
        const Complex c{rng.next_in(-100, 100), rng.next_in(-100, 100)};
        CHECK(parse_complex(format_complex(c)) == c);
    }
    CHECK(format_complex({1, 0}) == "1+0i");
    CHECK(format_complex({-0.5, -2}) == "-0.5-2i");
}
