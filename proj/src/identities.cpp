#include "qcong/identities.hpp"

#include <stdexcept>
#include <string>

#include "qcong/arith.hpp"
#include "qcong/ring.hpp"

namespace qcong {

namespace {

LaurentPoly qmono(long exponent) { return LaurentPoly::monomial(1, exponent); }

LaurentPoly signed_unit(long exponent) { return LaurentPoly(sign_pow(exponent)); }

/// (-q^a; q^step)_k = prod_{j<k} (1 + q^(a + j step)).
LaurentPoly neg_pochhammer(long a, long step, long k) {
  LaurentPoly out = 1;
  for (long j = 0; j < k; ++j) out *= LaurentPoly(1) + qmono(a + j * step);
  return out;
}

/// c * x^k.
XLaurent x_monomial(const LaurentPoly& c, long k) {
  std::vector<LaurentPoly> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return XLaurent(std::move(v));
}

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

}  // namespace

XLaurent legendre_expansion_binomial(long n) {
  require(n >= 0, "legendre expansion needs n >= 0");
  XLaurent out;
  for (long k = 0; k <= n; ++k) {
    LaurentPoly c = laurent_qbinom(n, k) * laurent_qbinom(n + k, k) * qmono(k * (k + 1) / 2 - n * k);
    out.add_to(static_cast<std::size_t>(k), signed_unit(k) * c);
  }
  return out;
}

XLaurent legendre_expansion_shifted(long n) {
  require(n >= 0, "legendre expansion needs n >= 0");
  XLaurent sum;
  for (long k = 0; k <= n; ++k) {
    LaurentPoly c = signed_unit(k) * laurent_qbinom(n, k) * laurent_qbinom(n + k, k) * qmono(k * (k + 1) / 2 - n * k);
    sum += x_laurent_pochhammer(1, k) * c;
  }
  return sum * (signed_unit(n) * qmono(-n * (n + 1) / 2));
}

XLaurent legendre_expansion_squared(long n) {
  require(n >= 0, "legendre expansion needs n >= 0");
  XLaurent out;
  for (long k = 0; k <= n; ++k) {
    LaurentPoly b = laurent_qbinom(n, k);
    LaurentPoly c = signed_unit(k) * b * b * qmono(k * (k + 1) / 2 - n * k);
    out += x_monomial(c, k) * x_laurent_pochhammer(1, n - k);
  }
  return out;
}

bool verify_q_binomial_theorem(long big_n) {
  require(big_n >= 0, "q-binomial theorem needs N >= 0");
  XLaurent rhs;
  for (long k = 0; k <= big_n; ++k) {
    rhs.add_to(static_cast<std::size_t>(k), signed_unit(k) * laurent_qbinom(big_n, k) * qmono(k * (k - 1) / 2));
  }
  return x_laurent_pochhammer(0, big_n) == rhs;
}

bool verify_q_chu_vandermonde(long m, long n) {
  require(0 <= m && m <= n, "q-Chu-Vandermonde needs 0 <= m <= n");
  LaurentPoly lhs;
  for (long k = 0; k <= m; ++k) {
    lhs += laurent_qbinom(m, k) * laurent_qbinom(n, k) * qmono((m - k) * (n - k));
  }
  return lhs == laurent_qbinom(n + m, m);
}

bool verify_half_pochhammer_ratio(long p) {
  require(p >= 3 && is_prime(p), "needs an odd prime");
  auto ctx = RingCtx::create(static_cast<int>(p), 2);
  const long h = (p - 1) / 2;
  for (long k = 0; k <= p - 1; ++k) {
    RingElem num = pochhammer(ctx, 1, 2, k);
    RingElem den = pochhammer(ctx, 2, 2, k);
    RingElem lhs = num * num * inv(den * den);
    RingElem rhs = qbinom(ctx, h, k, 2) * qbinom(ctx, h + k, k, 2) * qpow(ctx, k * k - k * p);
    if (k % 2 == 1) rhs = -rhs;
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool verify_alternating_legendre_sum(long n, long j) {
  require(n >= 1 && 0 <= j && j <= n, "needs n >= 1 and 0 <= j <= n");
  // Both sides multiplied by (-q;q)_n: 1/(-q;q)_k becomes (-q^(k+1);q)_(n-k).
  LaurentPoly lhs;
  for (long k = j; k <= n; ++k) {
    lhs += signed_unit(k) * laurent_qbinom(n + k, k) * laurent_qbinom(n - j, k - j) *
           qmono(k * (k + 1) / 2 - n * k) * neg_pochhammer(k + 1, 1, n - k);
  }
  if ((n - j) % 2 != 0) return lhs.is_zero();

  const long exponent = (n - j) * (n - j + 2) / 4 - j * (j - 1) / 2;
  LaurentPoly denom;
  LaurentPoly rhs;
  if (n % 2 == 0) {
    denom = laurent_pochhammer(n - j + 1, 2, j / 2);
    rhs = signed_unit((n - j) / 2) * laurent_qbinom(n, n / 2, 2) * laurent_pochhammer(n + 1, 2, j / 2) *
          qmono(exponent);
  } else {
    // (-q;q)_n / (-q;q)_(n-1) leaves a factor 1 + q^n.
    denom = laurent_pochhammer(n - j + 1, 2, (j - 1) / 2);
    rhs = signed_unit((n - j) / 2 - 1) * laurent_qbinom(n - 1, (n - 1) / 2, 2) *
          laurent_pochhammer(n + 2, 2, (j - 1) / 2) * qmono(exponent) * (LaurentPoly(1) + qmono(n));
  }
  return lhs * denom == rhs;
}

long inverted_gauss_exponent(long n, long j) { return (n + j + 1) * (n - j) / 2; }

bool verify_terminating_gauss(long n, long j) {
  require(0 <= j && j <= n, "needs 0 <= j <= n");
  const long len = n - j;
  // Common denominator (q;q)_len (q^(2j+2);q^2)_len.
  auto cleared_sum = [&](bool q_to_k) {
    LaurentPoly sum;
    for (long k = 0; k <= len; ++k) {
      const long weight = q_to_k ? k : k * (k + 1) / 2;
      sum += laurent_pochhammer(n + j + 1, 1, k) * laurent_pochhammer(j - n, 1, k) * qmono(weight) *
             laurent_pochhammer(k + 1, 1, len - k) * laurent_pochhammer(2 * j + 2 + 2 * k, 2, len - k);
    }
    return sum;
  };
  const LaurentPoly form_gauss = cleared_sum(false);
  const LaurentPoly form_inverted = cleared_sum(true);
  if (len % 2 != 0) return form_gauss.is_zero() && form_inverted.is_zero();

  const long h = len / 2;
  const LaurentPoly closed = laurent_pochhammer(j - n + 1, 2, h) * laurent_pochhammer(1, 1, len) *
                             laurent_pochhammer(2 * j + 2 + 2 * h, 2, len - h);
  // q -> 1/q turns the closed form's prefactor into q^((n+j+1)(n-j)/2).
  return form_gauss == closed && form_inverted == closed * qmono(inverted_gauss_exponent(n, j));
}

bool verify_shifted_legendre_symmetry(long n) {
  require(n >= 1, "needs n >= 1");
  // (-q;q)_n F_n(x,q).
  XLaurent cleared;
  for (long k = 0; k <= n; ++k) {
    LaurentPoly c = signed_unit(k) * laurent_qbinom(n, k) * laurent_qbinom(n + k, k) *
                    qmono(k * (k + 1) / 2 - n * k) * neg_pochhammer(k + 1, 1, n - k);
    cleared += x_laurent_pochhammer(0, k) * c;
  }
  for (long jx = 0; jx <= n; ++jx) {
    if ((n - jx) % 2 != 0 && !cleared.coeff(static_cast<std::size_t>(jx)).is_zero()) return false;
  }
  XLaurent mirrored = cleared.negate_x();
  if (n % 2 != 0) mirrored = mirrored * LaurentPoly(-1);
  return cleared == mirrored;
}

bool verify_fractional_binomial_chain(long p, long m, long r, long k) {
  require(p >= 3 && is_prime(p), "needs an odd prime");
  require(m >= 1 && m % p != 0, "needs m >= 1 with p not dividing m");
  require(r >= 1 && 0 <= k && k <= p - 1, "needs r >= 1 and 0 <= k <= p-1");
  const long t = least_nonneg_residue(-r, m, p);
  const long shifted = m * t + r;
  if (shifted % p != 0 || shifted / p <= 0) {
    throw std::logic_error("s = (m<-r/m>_p + r)/p is not a positive integer");
  }
  const long s = shifted / p;

  auto ctx = RingCtx::create(static_cast<int>(p), 1);
  RingElem den = pochhammer(ctx, m, m, k);
  RingElem lhs = pochhammer(ctx, r, m, k) * pochhammer(ctx, m - r, m, k) * inv(den * den);
  RingElem rhs = qbinom(ctx, t, k, m) * qbinom(ctx, t + k, k, m) * qpow(ctx, m * k * (k - 1) / 2 - k * (p * s - r));
  if (k % 2 == 1) rhs = -rhs;
  return lhs == rhs;
}

}  // namespace qcong
