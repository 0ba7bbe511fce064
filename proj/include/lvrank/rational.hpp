#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lvrank {

// GMP keeps mpq_class canonical (gcd(|num|, den) = 1, den > 0) after every
// arithmetic operation, provided the operands are canonical. The two-argument
// constructor does not reduce: call canonicalize() after Rational(p, q).
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Parses an exact rational literal: integer ("-3"), fraction ("7/4") or
/// finite decimal with optional exponent ("0.5", "-1.25e-3"). Decimals are
/// converted digit by digit, never through binary floating point.
/// Throws Error(kParse) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

int sign(const Rational& value);

/// Smallest positive multiple of `v` with integer, coprime entries.
/// The zero vector is returned unchanged.
RatVector primitive_integer_vector(const RatVector& v);

std::vector<double> to_double(const RatVector& v);

}  // namespace lvrank
