#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "qcong/qpoly.hpp"

namespace qcong {

/// Raised when an element sharing a factor with [p] is inverted.
class NotAUnit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a ring element is not an integer power of q.
class NotAPowerOfQ : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when values from two different quotient rings are combined.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RingCtx;
using RingPtr = std::shared_ptr<const RingCtx>;

/**
 * The quotient ring Q[q] / ([p]^r) for an odd prime p.
 *
 * Immutable once built; share it through RingPtr. [p] is irreducible over Q,
 * so an element is a unit exactly when [p] does not divide its representative.
 */
class RingCtx {
 public:
  /// Throws std::invalid_argument unless p is an odd prime and r >= 1.
  static RingPtr create(int p, int r);

  int p() const { return p_; }
  int r() const { return r_; }
  /// [p]^r, monic of degree r(p-1).
  const QPoly& modulus() const { return modulus_; }
  /// [p] itself.
  const QPoly& cyclotomic() const { return cyclotomic_; }
  int rep_degree_bound() const { return modulus_.degree(); }

  /// Canonical representative of q^-1.
  const QPoly& q_inverse() const { return q_inverse_; }

 private:
  RingCtx(int p, int r);

  int p_;
  int r_;
  QPoly cyclotomic_;
  QPoly modulus_;
  QPoly q_inverse_;
};

/// Element of a RingCtx, always held as its least-degree representative.
class RingElem {
 public:
  RingElem(RingPtr ctx, const QPoly& value);

  const RingPtr& ctx() const { return ctx_; }
  const QPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const { return rep_ == QPoly(1); }
  bool is_unit() const;

  RingElem& operator+=(const RingElem& other);
  RingElem& operator-=(const RingElem& other);
  RingElem& operator*=(const RingElem& other);
  RingElem& operator*=(const Rational& scalar);

  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }
  friend RingElem operator*(RingElem a, const Rational& s) { return a *= s; }
  friend RingElem operator*(const Rational& s, RingElem a) { return a *= s; }
  RingElem operator-() const;

  /// Representation equality, i.e. congruence modulo [p]^r. Throws
  /// ContextMismatch across rings.
  friend bool operator==(const RingElem& a, const RingElem& b);

  /// Power with a non-negative exponent by square-and-multiply.
  RingElem pow(unsigned long exponent) const;

 private:
  // Skips reduction; caller guarantees deg(rep) < deg(modulus).
  struct Canonical {};
  RingElem(RingPtr ctx, QPoly rep, Canonical);
  friend RingElem inv(const RingElem& u);
  friend RingElem qpow(const RingPtr& ctx, long n);

  RingPtr ctx_;
  QPoly rep_;
};

bool same_ring(const RingCtx& a, const RingCtx& b);
void require_same_ring(const RingElem& a, const RingElem& b);

RingElem reduce(const RingPtr& ctx, const QPoly& a);
RingElem ring_constant(const RingPtr& ctx, const Rational& c);

/// Multiplicative inverse; throws NotAUnit when [p] divides u.
RingElem inv(const RingElem& u);

/// q^n for any integer n (negative powers via the inverse of q).
RingElem qpow(const RingPtr& ctx, long n);

/// (q^a; q^m)_k = prod_{j<k} (1 - q^(a + j m)).
RingElem pochhammer(const RingPtr& ctx, long a, long m, long k);

/// Gaussian binomial [n choose k] in base q^m; zero outside 0 <= k <= n.
RingElem qbinom(const RingPtr& ctx, long n, long k, long m);

struct QPowerSolution {
  long exponent;
  /// True for r = 1: the exponent is only determined modulo p.
  bool mod_p_only;
};

/**
 * Recovers f with u = q^f.
 *
 * Modulo [p] only the residue f mod p is determined. Modulo [p]^2 the residue
 * f0 is found first; then u q^-f0 - 1 must equal k (q - 1) [p] for an integer
 * k, giving f = f0 + p k. Throws NotAPowerOfQ otherwise.
 */
QPowerSolution solve_q_power(const RingElem& u);

}  // namespace qcong
