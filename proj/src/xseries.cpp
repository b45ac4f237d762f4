#include "qcong/xseries.hpp"

#include <algorithm>
#include <string>

namespace qcong {

XPoly::XPoly(RingPtr ctx) : ctx_(std::move(ctx)) {}

XPoly::XPoly(RingPtr ctx, std::vector<RingElem> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!same_ring(*c.ctx(), *ctx_)) throw ContextMismatch("XPoly coefficient from another ring");
  }
}

int XPoly::degree() const {
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (!coeffs_[k].is_zero()) return static_cast<int>(k);
  }
  return -1;
}

RingElem XPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : ring_constant(ctx_, 0);
}

void XPoly::add_to(std::size_t k, const RingElem& c) {
  while (coeffs_.size() <= k) coeffs_.push_back(ring_constant(ctx_, 0));
  coeffs_[k] += c;
}

XPoly& XPoly::operator+=(const XPoly& other) {
  if (!same_ring(*ctx_, *other.ctx_)) throw ContextMismatch("XPoly sum across rings");
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) add_to(k, other.coeffs_[k]);
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& other) {
  if (!same_ring(*ctx_, *other.ctx_)) throw ContextMismatch("XPoly difference across rings");
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) add_to(k, -other.coeffs_[k]);
  return *this;
}

XPoly& XPoly::operator*=(const RingElem& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

XPoly XPoly::negate_x() const {
  XPoly out = *this;
  for (std::size_t k = 1; k < out.coeffs_.size(); k += 2) out.coeffs_[k] = -out.coeffs_[k];
  return out;
}

std::optional<XDifference> first_difference(const XPoly& a, const XPoly& b) {
  if (!same_ring(*a.ctx(), *b.ctx())) throw ContextMismatch("comparing XPolys from different rings");
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t k = 0; k < n; ++k) {
    RingElem d = a.coeff(k) - b.coeff(k);
    if (!d.is_zero()) return XDifference{k, d.rep()};
  }
  return std::nullopt;
}

bool congruent(const XPoly& a, const XPoly& b) { return !first_difference(a, b).has_value(); }

RingElem substitute_x(const XPoly& a, const RingElem& v) {
  if (!same_ring(*a.ctx(), *v.ctx())) throw ContextMismatch("substituting a value from another ring");
  // Horner from the top coefficient down.
  RingElem acc = ring_constant(a.ctx(), 0);
  for (std::size_t k = a.coeffs().size(); k-- > 0;) {
    acc *= v;
    acc += a.coeffs()[k];
  }
  return acc;
}

namespace {

void require_coprime(const RingPtr& ctx, long m) {
  if (m < 1) throw std::domain_error("base exponent m must be positive");
  if (m % ctx->p() == 0) {
    throw std::domain_error("p=" + std::to_string(ctx->p()) + " divides m=" + std::to_string(m));
  }
}

}  // namespace

std::vector<RingElem> general_terms(const RingPtr& ctx, long m, long r, long upto) {
  require_coprime(ctx, m);
  const RingElem one = ring_constant(ctx, 1);
  const RingElem step = qpow(ctx, m);
  // Running powers q^(r+km), q^(m-r+km), q^(m(k+1)).
  RingElem a = qpow(ctx, r);
  RingElem b = qpow(ctx, m - r);
  RingElem c = step;
  std::vector<RingElem> terms;
  terms.reserve(static_cast<std::size_t>(std::max(upto + 1, 0L)));
  RingElem term = one;
  for (long k = 0; k <= upto; ++k) {
    terms.push_back(term);
    if (k == upto) break;
    term *= (one - a) * (one - b);
    if (!term.is_zero()) {
      RingElem d = one - c;
      term *= inv(d * d);
    }
    a *= step;
    b *= step;
    c *= step;
  }
  return terms;
}

XPoly x_pochhammer(const RingPtr& ctx, long m, long k) {
  std::vector<RingElem> coeffs;
  coeffs.reserve(static_cast<std::size_t>(k) + 1);
  for (long j = 0; j <= k; ++j) {
    RingElem c = qbinom(ctx, k, j, m) * qpow(ctx, m * j * (j - 1) / 2);
    coeffs.push_back(j % 2 == 0 ? c : -c);
  }
  return XPoly(ctx, std::move(coeffs));
}

XPoly sum_lhs_general(const RingPtr& ctx, long m, long r, long upto) {
  return XPoly(ctx, general_terms(ctx, m, r, upto));
}

XPoly sum_lhs_general(const RingPtr& ctx, long m, long r) {
  return sum_lhs_general(ctx, m, r, full_range(ctx));
}

XPoly sum_rhs_pochx(const RingPtr& ctx, long m, long r, long upto) {
  const auto terms = general_terms(ctx, m, r, upto);
  XPoly out(ctx);
  const RingElem step = qpow(ctx, m);
  RingElem shift = ring_constant(ctx, 1);
  for (long k = 0; k <= upto; ++k) {
    const RingElem& t = terms[static_cast<std::size_t>(k)];
    if (!t.is_zero()) out += x_pochhammer(ctx, m, k) * (t * shift);
    shift *= step;
  }
  return out;
}

XPoly sum_rhs_pochx(const RingPtr& ctx, long m, long r) {
  return sum_rhs_pochx(ctx, m, r, full_range(ctx));
}

XPoly sum_tauraso_rhs(const RingPtr& ctx) {
  const long p = ctx->p();
  const long h = (p - 1) / 2;
  XPoly out(ctx);
  for (long k = 0; k <= h; ++k) {
    RingElem b = qbinom(ctx, h, k, 2);
    RingElem coeff = b * b * qpow(ctx, k * k - p * k);
    if (k % 2 == 1) coeff = -coeff;
    // (-x)^k shifts the x-expansion of (x;q^2)_(h-k) up by k.
    XPoly poch = x_pochhammer(ctx, 2, h - k);
    for (std::size_t j = 0; j < poch.coeffs().size(); ++j) {
      out.add_to(j + static_cast<std::size_t>(k), poch.coeffs()[j] * coeff);
    }
  }
  return out;
}

XPoly sum_square_expansion(const RingPtr& ctx, long m, long t) {
  XPoly out(ctx);
  for (long k = 0; k <= t; ++k) {
    RingElem b = qbinom(ctx, t, k, m);
    RingElem coeff = b * b * qpow(ctx, m * k * (k - 1) / 2 - m * k * t);
    if (k % 2 == 1) coeff = -coeff;
    XPoly poch = x_pochhammer(ctx, m, t - k);
    for (std::size_t j = 0; j < poch.coeffs().size(); ++j) {
      out.add_to(j + static_cast<std::size_t>(k), poch.coeffs()[j] * coeff);
    }
  }
  return out;
}

XPoly sum_P_nmr(const RingPtr& ctx, long m, long r, long n) {
  const auto terms = general_terms(ctx, m, r, n);
  const RingElem one = ring_constant(ctx, 1);
  const RingElem step = qpow(ctx, m);
  XPoly out(ctx);
  RingElem shift = one;       // q^(mk)
  RingElem inv_denom = one;   // 1 / (-q^m;q^m)_k
  for (long k = 0; k <= n; ++k) {
    if (k > 0) inv_denom *= inv(one + shift);
    const RingElem& t = terms[static_cast<std::size_t>(k)];
    if (!t.is_zero()) out += x_pochhammer(ctx, m, k) * (t * shift * inv_denom);
    shift *= step;
  }
  return out;
}

}  // namespace qcong
