#pragma once

#include <cstdint>

namespace qcong {

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::int64_t n);

/// base^exponent mod modulus, modulus >= 1.
std::int64_t mod_pow(std::int64_t base, std::int64_t exponent, std::int64_t modulus);

/// Inverse of a modulo n; throws std::domain_error if gcd(a, n) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t n);

/// Non-negative a mod n.
inline std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

/// <num/den>_p: the t in [0, p) with den * t = num (mod p).
/// Throws std::domain_error when p divides den.
std::int64_t least_nonneg_residue(std::int64_t num, std::int64_t den, std::int64_t p);

/// Legendre symbol (a/p) by Euler's criterion; p an odd prime.
int legendre_symbol(std::int64_t a, std::int64_t p);

/// Closed forms via supplementary laws; used to cross-check legendre_symbol.
int legendre_minus_one(std::int64_t p);
int legendre_minus_two(std::int64_t p);
int legendre_minus_three(std::int64_t p);

inline int sign_pow(std::int64_t exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace qcong
