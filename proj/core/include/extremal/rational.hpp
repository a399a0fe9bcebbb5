#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace extremal {

// Exact scalar used everywhere in the library. Always kept canonical
// (lowest terms, positive denominator).
using Rational = mpq_class;

// Parses "p", "-p", "p/q" or "-p/q" (decimal digits only). The result is
// canonicalized, so "2/4" reads as 1/2. Throws std::invalid_argument on
// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical lowest-terms text, sign on the numerator: "3", "-1/2".
std::string to_string(const Rational& value);

// num / den in lowest terms. mpq_class(num, den) alone does not reduce, and
// GMP arithmetic on unreduced operands is undefined.
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& value) { return sgn(value); }

inline Rational abs_value(const Rational& value) { return abs(value); }

}  // namespace extremal
