#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cyclebound {

/// Arbitrary-precision rational; GMP keeps it canonical (den > 0, coprime).
using Rational = mpq_class;

/// "p" or "p/q".
std::string to_string(const Rational &q);

/// Accepts "7", "-5/2", "0.125".
Rational parse_rational(std::string_view text);

bool is_integer(const Rational &q);
bool is_nonnegative_integer(const Rational &q);

/// Requires is_integer(q) and |q| fitting in a long.
long to_long(const Rational &q);

Rational rational_pow(const Rational &base, long exponent);

} // namespace cyclebound
