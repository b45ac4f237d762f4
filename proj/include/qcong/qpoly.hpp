#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcong/rational.hpp"

namespace qcong {

/**
 * Dense univariate polynomial in q with exact rational coefficients.
 *
 * Coefficient i multiplies q^i. Trailing zeros are never stored, so the zero
 * polynomial is the empty coefficient vector and two polynomials are equal
 * iff their coefficient vectors are equal.
 */
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  QPoly(long constant) : QPoly(Rational(constant)) {}  // NOLINT

  /// Integer coefficient list, lowest power first.
  static QPoly from_ints(std::initializer_list<long> coeffs);
  static QPoly monomial(const Rational& c, std::size_t exponent);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of q^i (zero past the degree).
  const Rational& coeff(std::size_t i) const;
  std::span<const Rational> coeffs() const { return coeffs_; }
  const Rational& leading() const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);
  QPoly& operator*=(const Rational& scalar);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }
  friend QPoly operator*(const Rational& s, QPoly a) { return a *= s; }
  QPoly operator-() const;

  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  /// p(q) -> p(q^m).
  QPoly spread(unsigned m) const;
  /// Multiplication by q^shift.
  QPoly shifted(std::size_t shift) const;
  QPoly derivative() const;
  QPoly monic() const;

  Rational eval(const Rational& at) const;

  /// Dense human-readable form, e.g. "1 + 2*q - 1/3*q^4".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

QPoly add(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);

/// Euclidean division: a = quotient * b + remainder, deg(remainder) < deg(b).
/// Throws std::domain_error when b is zero.
std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);

/// Remainder only; skips building the quotient.
QPoly remainder(const QPoly& a, const QPoly& b);

struct GcdResult {
  QPoly gcd;  // monic, or zero when both inputs are zero
  QPoly s;
  QPoly t;
};

/// Extended Euclid: gcd = s*a + t*b with gcd monic.
/// Throws std::domain_error when both inputs are zero.
GcdResult ext_gcd(const QPoly& a, const QPoly& b);

/// [n] = 1 + q + ... + q^(n-1). Throws std::domain_error for n < 1.
QPoly q_integer(int n);

/// Sum of coefficients, i.e. the value at q = 1.
Rational eval_at_one(const QPoly& a);

/// Gaussian binomial coefficient [n choose k]_q as an integer polynomial;
/// zero when k < 0 or k > n.
QPoly gaussian_binomial(int n, int k);

}  // namespace qcong
