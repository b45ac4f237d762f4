#pragma once

#include <gmpxx.h>

#include <string>

namespace qcong {

/// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

/// num/den in lowest terms (mpq_class's two-argument constructor does not
/// canonicalize).
inline Rational make_rational(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& value);

/// Parses "a" or "a/b" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace qcong
