#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dcoh {

/// Arbitrary-precision integer used throughout the engine.
using Integer = mpz_class;
/// Reduced fraction; gmp keeps it canonical after every arithmetic operation.
using Rational = mpq_class;

std::string to_string(const Integer& value);
/// Writes "p" for integral values and "p/q" otherwise.
std::string to_string(const Rational& value);

/// Parses "p" or "p/q" (optional sign, decimal digits). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& value);
/// Representative of value + Z in [0, 1).
Rational fractional_part(const Rational& value);
bool is_integral(const Rational& value);

inline Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }
inline int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

/// Truncating quotient; |a - q*b| < |b|.
Integer truncated_quotient(const Integer& a, const Integer& b);

std::vector<Rational> to_rational(const std::vector<Integer>& values);

}  // namespace dcoh
