#include "qcong/arith.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcong {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod_u(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  const auto un = static_cast<u64>(n);
  u64 d = un - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod_u(a, d, un);
    if (x == 1 || x == un - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, un);
      if (x == un - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exponent, std::int64_t modulus) {
  if (modulus < 1 || exponent < 0) throw std::domain_error("mod_pow: bad arguments");
  return static_cast<std::int64_t>(
      pow_mod_u(static_cast<u64>(floor_mod(base, modulus)), static_cast<u64>(exponent),
                static_cast<u64>(modulus)));
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
  std::int64_t old_r = floor_mod(a, n), r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    old_r = std::exchange(r, old_r - quot * r);
    old_s = std::exchange(s, old_s - quot * s);
  }
  if (old_r != 1) throw std::domain_error("not invertible modulo " + std::to_string(n));
  return floor_mod(old_s, n);
}

std::int64_t least_nonneg_residue(std::int64_t num, std::int64_t den, std::int64_t p) {
  if (floor_mod(den, p) == 0) {
    throw std::domain_error("denominator divisible by p=" + std::to_string(p));
  }
  return floor_mod(floor_mod(num, p) * mod_inverse(den, p), p);
}

int legendre_symbol(std::int64_t a, std::int64_t p) {
  std::int64_t e = mod_pow(a, (p - 1) / 2, p);
  if (e == 0) return 0;
  return e == 1 ? 1 : -1;
}

int legendre_minus_one(std::int64_t p) { return p % 4 == 1 ? 1 : -1; }

int legendre_minus_two(std::int64_t p) {
  std::int64_t r = p % 8;
  return (r == 1 || r == 3) ? 1 : -1;
}

int legendre_minus_three(std::int64_t p) {
  if (p == 3) return 0;
  return p % 3 == 1 ? 1 : -1;
}

}  // namespace qcong
