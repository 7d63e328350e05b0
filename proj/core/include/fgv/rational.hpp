#pragma once

#include <gmpxx.h>

#include <string>

namespace fgv {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator). Backed by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed text or a
/// zero denominator.
Rational parse_rational(const std::string& text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

Rational factorial(unsigned n);

/// value^exponent for a possibly negative exponent (value must be nonzero
/// when exponent < 0).
Rational power(const Rational& value, int exponent);

}  // namespace fgv
