#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qcong/ring.hpp"

namespace qcong {

/**
 * Polynomial in an indeterminate x whose coefficients live in one quotient
 * ring Q[q]/[p]^r.
 *
 * Two XPolys are congruent when every pair of x-coefficients is congruent,
 * the shorter one padded with zeros.
 */
class XPoly {
 public:
  explicit XPoly(RingPtr ctx);
  XPoly(RingPtr ctx, std::vector<RingElem> coeffs);

  const RingPtr& ctx() const { return ctx_; }
  /// -1 when every coefficient is zero.
  int degree() const;
  RingElem coeff(std::size_t k) const;
  std::span<const RingElem> coeffs() const { return coeffs_; }

  /// coeff(k) += c.
  void add_to(std::size_t k, const RingElem& c);

  XPoly& operator+=(const XPoly& other);
  XPoly& operator-=(const XPoly& other);
  XPoly& operator*=(const RingElem& scalar);
  friend XPoly operator*(XPoly a, const RingElem& s) { return a *= s; }
  friend XPoly operator*(const RingElem& s, XPoly a) { return a *= s; }
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }

  /// A(x) -> A(-x).
  XPoly negate_x() const;

 private:
  RingPtr ctx_;
  std::vector<RingElem> coeffs_;
};

/// Coefficientwise congruence. Throws ContextMismatch across rings.
bool congruent(const XPoly& a, const XPoly& b);

struct XDifference {
  std::size_t index;  // power of x
  QPoly difference;   // canonical rep of a_k - b_k
};

/// First x-coefficient where a and b differ, if any.
std::optional<XDifference> first_difference(const XPoly& a, const XPoly& b);

/// sum_k coeff_k * v^k.
RingElem substitute_x(const XPoly& a, const RingElem& v);

/// (q^r;q^m)_k (q^(m-r);q^m)_k / (q^m;q^m)_k^2 for k = 0..upto, built with the
/// one-step ratio. Throws std::domain_error if p | m.
std::vector<RingElem> general_terms(const RingPtr& ctx, long m, long r, long upto);

/// (x;q^m)_k expanded by the q-binomial theorem.
XPoly x_pochhammer(const RingPtr& ctx, long m, long k);

/// Default summation bound p - 1.
inline long full_range(const RingPtr& ctx) { return ctx->p() - 1; }

/// sum_{k<=upto} term_k x^k.
XPoly sum_lhs_general(const RingPtr& ctx, long m, long r, long upto);
XPoly sum_lhs_general(const RingPtr& ctx, long m, long r);

/// sum_{k<=upto} term_k q^(mk) (x;q^m)_k.
XPoly sum_rhs_pochx(const RingPtr& ctx, long m, long r, long upto);
XPoly sum_rhs_pochx(const RingPtr& ctx, long m, long r);

/// sum_{k<=h} [h k]_{q^2}^2 q^(k^2 - pk) (-x)^k (x;q^2)_(h-k), h = (p-1)/2.
XPoly sum_tauraso_rhs(const RingPtr& ctx);

/// sum_{k<=t} [t k]_{q^m}^2 q^(mk(k-1)/2 - mkt) (-x)^k (x;q^m)_(t-k).
XPoly sum_square_expansion(const RingPtr& ctx, long m, long t);

/// P_{n,m,r}(q,x) = sum_{k<=n} term_k (x;q^m)_k q^(mk) / (-q^m;q^m)_k.
/// Throws NotAUnit if some 1 + q^(mj) shares a factor with [p].
XPoly sum_P_nmr(const RingPtr& ctx, long m, long r, long n);

}  // namespace qcong
