#pragma once

#include <string>
#include <vector>

#include "qcong/qpoly.hpp"

namespace qcong {

/// q^shift * body over Q, with body(0) != 0 unless the value is zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long shift, QPoly body);
  LaurentPoly(const QPoly& body) : LaurentPoly(0, body) {}  // NOLINT
  LaurentPoly(long constant) : LaurentPoly(0, QPoly(constant)) {}  // NOLINT

  static LaurentPoly monomial(const Rational& c, long exponent);

  long shift() const { return shift_; }
  const QPoly& body() const { return body_; }
  bool is_zero() const { return body_.is_zero(); }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const { return {shift_, -body_}; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  std::string to_string() const;

 private:
  void normalize();

  long shift_ = 0;
  QPoly body_;
};

/// (q^a; q^step)_k = prod_{j<k} (1 - q^(a + j step)), exact.
LaurentPoly laurent_pochhammer(long a, long step, long k);

/// Gaussian binomial in base q^m as a Laurent polynomial.
LaurentPoly laurent_qbinom(long n, long k, long m = 1);

/// Polynomial in x with LaurentPoly coefficients; trailing zeros trimmed.
class XLaurent {
 public:
  XLaurent() = default;
  explicit XLaurent(std::vector<LaurentPoly> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const LaurentPoly& coeff(std::size_t k) const;
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

  void add_to(std::size_t k, const LaurentPoly& c);

  XLaurent& operator+=(const XLaurent& other);
  XLaurent& operator-=(const XLaurent& other);
  friend XLaurent operator+(XLaurent a, const XLaurent& b) { return a += b; }
  friend XLaurent operator-(XLaurent a, const XLaurent& b) { return a -= b; }
  friend XLaurent operator*(const XLaurent& a, const XLaurent& b);
  friend XLaurent operator*(XLaurent a, const LaurentPoly& s);
  friend bool operator==(const XLaurent& a, const XLaurent& b) = default;

  XLaurent negate_x() const;

 private:
  void trim();

  std::vector<LaurentPoly> coeffs_;
};

/// (x q^a; q)_k = prod_{j<k} (1 - x q^(a + j)).
XLaurent x_laurent_pochhammer(long a, long k);

}  // namespace qcong
