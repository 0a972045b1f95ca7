#ifndef MAGCAT_RATIONAL_HPP
#define MAGCAT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace magcat {

// All arithmetic in this library is exact. Coefficients are arbitrary
// precision rationals, homology works over arbitrary precision integers.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p/q" or "p/q"; throws ParseError on malformed input or q = 0.
Rational parse_rational(const std::string& text);

// Canonical text: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// floor(a / b) for b > 0.
Integer floor_div(const Rational& a, const Rational& b);

}  // namespace magcat

#endif
