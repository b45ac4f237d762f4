#pragma once

#include <cstdint>
#include <vector>

#include "qcong/rational.hpp"
#include "qcong/record.hpp"

namespace qcong {

/// Residue modulo p^2 for an odd prime p.
class ModP2Int {
 public:
  ModP2Int(std::int64_t p, std::int64_t value);
  /// Reduces a rational whose denominator is prime to p; throws
  /// std::domain_error otherwise.
  static ModP2Int from_rational(const Rational& value, std::int64_t p);

  std::int64_t p() const { return p_; }
  std::int64_t modulus() const { return p_ * p_; }
  /// Canonical value in [0, p^2).
  std::int64_t value() const { return value_; }
  /// Representative in (-p^2/2, p^2/2], handy for witnesses.
  std::int64_t centered() const;

  ModP2Int& operator+=(const ModP2Int& o);
  ModP2Int& operator-=(const ModP2Int& o);
  ModP2Int& operator*=(const ModP2Int& o);
  friend ModP2Int operator+(ModP2Int a, const ModP2Int& b) { return a += b; }
  friend ModP2Int operator-(ModP2Int a, const ModP2Int& b) { return a -= b; }
  friend ModP2Int operator*(ModP2Int a, const ModP2Int& b) { return a *= b; }
  friend bool operator==(const ModP2Int&, const ModP2Int&) = default;

 private:
  void same_modulus(const ModP2Int& o) const;

  std::int64_t p_;
  std::int64_t value_;
};

/// Central-binomial families: 16 -> C(2k,k)^2/16^k, 27 -> C(3k,2k)C(2k,k)/27^k,
/// 64 -> C(4k,2k)C(2k,k)/64^k, 432 -> C(6k,3k)C(3k,k)/432^k. Terms k = 0..n,
/// built with the one-step ratio. Throws std::invalid_argument for other bases.
std::vector<Rational> rv_terms(int base, long n);

/// C(a,k) C(-1-a,k) for a = num/den, k = 0..n.
std::vector<Rational> sun_terms(const Rational& a, long n);

/// sum_{k<p} term_k = (-d/p) (mod p^2), d = 1, 3, 2, 1 for base 16, 27, 64, 432.
CheckRecord check_rv(long p, int base);
/// sum C(2k,k)^2 x^k/16^k = sum_{k<=h} C(h,k)^2 (-x)^k (1-x)^(h-k) (mod p^2), h = (p-1)/2.
CheckRecord check_tauraso(long p, long x);
/// With a = -r/m: P_{p-1}(a,x) = (-1)^<a>_p P_{p-1}(a,-x) and
/// sum C(a,k)C(-1-a,k)(x^k - (-1)^<a>_p (1-x)^k) = 0, both mod p^2.
CheckRecord check_sun_legendre(long p, long m, long r, long x);
/// sum C(2k,k)^2/32^k = 0 (mod p^2) for p = 3 (mod 4).
CheckRecord check_32k(long p);
/// sum C(2k,k)^3/64^k = 0 (mod p^2) for p = 3 (mod 4).
CheckRecord check_van_hamme(long p);
/// prod_{j<=k} ([2j-1]/[2j])^2 at q = 1 equals C(2k,k)^2/16^k for k <= k_max.
CheckRecord check_q_to_1_limit(long k_max);

}  // namespace qcong
