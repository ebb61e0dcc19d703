#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cplab {

// Exact scalars. gmpxx keeps mpq_class canonical (lowest terms, positive
// denominator) after every arithmetic operation, so equality is structural.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", an integer, or an exact decimal such as "-0.125" or "3e-2".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string rational_to_string(const Rational& q);

Integer factorial(unsigned n);

/// Binomial coefficient C(top, k) for top >= 0; zero when k < 0 or k > top.
Integer binomial(long top, long k);

}  // namespace cplab
