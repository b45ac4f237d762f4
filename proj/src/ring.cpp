#include "qcong/ring.hpp"

#include <utility>

#include "qcong/arith.hpp"

namespace qcong {

RingPtr RingCtx::create(int p, int r) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("ring modulus needs an odd prime, got p=" + std::to_string(p));
  }
  if (r < 1) throw std::invalid_argument("modulus power must be >= 1");
  return RingPtr(new RingCtx(p, r));
}

RingCtx::RingCtx(int p, int r) : p_(p), r_(r), cyclotomic_(q_integer(p)), modulus_(1) {
  for (int i = 0; i < r; ++i) modulus_ *= cyclotomic_;
  // q * s + modulus * t = 1; the modulus has constant term 1, so q is a unit.
  auto g = ext_gcd(QPoly::monomial(1, 1), modulus_);
  q_inverse_ = remainder(g.s, modulus_);
}

bool same_ring(const RingCtx& a, const RingCtx& b) {
  return &a == &b || (a.p() == b.p() && a.r() == b.r());
}

void require_same_ring(const RingElem& a, const RingElem& b) {
  if (!same_ring(*a.ctx(), *b.ctx())) {
    throw ContextMismatch("ring elements from different quotient rings");
  }
}

RingElem::RingElem(RingPtr ctx, const QPoly& value)
    : ctx_(std::move(ctx)), rep_(remainder(value, ctx_->modulus())) {}

RingElem::RingElem(RingPtr ctx, QPoly rep, Canonical) : ctx_(std::move(ctx)), rep_(std::move(rep)) {}

bool RingElem::is_unit() const {
  if (rep_.is_zero()) return false;
  return ext_gcd(rep_, ctx_->cyclotomic()).gcd.degree() == 0;
}

RingElem& RingElem::operator+=(const RingElem& other) {
  require_same_ring(*this, other);
  rep_ += other.rep_;
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& other) {
  require_same_ring(*this, other);
  rep_ -= other.rep_;
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& other) {
  require_same_ring(*this, other);
  rep_ = remainder(rep_ * other.rep_, ctx_->modulus());
  return *this;
}

RingElem& RingElem::operator*=(const Rational& scalar) {
  rep_ *= scalar;
  return *this;
}

RingElem RingElem::operator-() const { return RingElem(ctx_, -rep_, Canonical{}); }

bool operator==(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  return a.rep_ == b.rep_;
}

RingElem RingElem::pow(unsigned long exponent) const {
  RingElem result(ctx_, QPoly(1), Canonical{});
  RingElem base = *this;
  while (exponent != 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

RingElem reduce(const RingPtr& ctx, const QPoly& a) { return RingElem(ctx, a); }

RingElem ring_constant(const RingPtr& ctx, const Rational& c) { return RingElem(ctx, QPoly(c)); }

RingElem inv(const RingElem& u) {
  const auto& ctx = u.ctx();
  if (u.is_zero()) throw NotAUnit("zero is not invertible");
  auto g = ext_gcd(u.rep(), ctx->modulus());
  if (g.gcd.degree() != 0) {
    throw NotAUnit("element shares a factor with [" + std::to_string(ctx->p()) + "]: " +
                   u.rep().to_string());
  }
  return RingElem(ctx, remainder(g.s, ctx->modulus()), RingElem::Canonical{});
}

RingElem qpow(const RingPtr& ctx, long n) {
  if (n >= 0) {
    RingElem q(ctx, QPoly::monomial(1, 1));
    return q.pow(static_cast<unsigned long>(n));
  }
  RingElem q_inv(ctx, ctx->q_inverse(), RingElem::Canonical{});
  return q_inv.pow(static_cast<unsigned long>(-n));
}

RingElem pochhammer(const RingPtr& ctx, long a, long m, long k) {
  RingElem out = ring_constant(ctx, 1);
  const RingElem one = out;
  for (long j = 0; j < k; ++j) {
    out *= one - qpow(ctx, a + j * m);
    if (out.is_zero()) break;
  }
  return out;
}

RingElem qbinom(const RingPtr& ctx, long n, long k, long m) {
  if (k < 0 || k > n) return ring_constant(ctx, 0);
  if (m < 1) throw std::domain_error("qbinom base exponent must be positive");
  auto poly = gaussian_binomial(static_cast<int>(n), static_cast<int>(k));
  return reduce(ctx, poly.spread(static_cast<unsigned>(m)));
}

QPowerSolution solve_q_power(const RingElem& u) {
  const auto& ctx = u.ctx();
  const int p = ctx->p();
  if (ctx->r() > 2) throw std::domain_error("solve_q_power supports modulus powers 1 and 2");

  // Residue class: u = q^f0 modulo [p] for exactly one f0 in [0, p).
  const QPoly base = remainder(u.rep(), ctx->cyclotomic());
  long f0 = -1;
  for (int e = 0; e < p; ++e) {
    if (remainder(QPoly::monomial(1, static_cast<std::size_t>(e)), ctx->cyclotomic()) == base) {
      f0 = e;
      break;
    }
  }
  if (f0 < 0) throw NotAPowerOfQ("not congruent to any power of q modulo [p]: " + u.rep().to_string());
  if (ctx->r() == 1) return {f0, true};

  RingElem v = u * qpow(ctx, -f0);
  QPoly excess = v.rep() - QPoly(1);
  auto [by_linear, rest1] = divrem(excess, QPoly::from_ints({-1, 1}));
  if (!rest1.is_zero()) throw NotAPowerOfQ("u q^-f0 - 1 is not divisible by q - 1");
  auto [k_poly, rest2] = divrem(by_linear, ctx->cyclotomic());
  if (!rest2.is_zero()) throw NotAPowerOfQ("u q^-f0 - 1 is not divisible by (q - 1)[p]");
  if (!k_poly.is_constant() || !is_integer(k_poly.coeff(0))) {
    throw NotAPowerOfQ("quotient (u q^-f0 - 1)/((q - 1)[p]) is not an integer: " + k_poly.to_string());
  }
  const BigInt& k = k_poly.coeff(0).get_num();
  if (!k.fits_slong_p()) throw NotAPowerOfQ("exponent out of range");
  return {f0 + p * k.get_si(), false};
}

}  // namespace qcong
