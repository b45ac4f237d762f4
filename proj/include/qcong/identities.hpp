#pragma once

#include "qcong/laurent.hpp"

namespace qcong {

// Exact identities over Q[q, 1/q], plus two congruences that feed the
// sum reductions. Denominators are cleared by multiplying both sides with a
// fixed polynomial before comparing.

/// Little q-Legendre polynomial as sum_k [n k][n+k k] q^(k(k+1)/2 - nk) (-x)^k.
XLaurent legendre_expansion_binomial(long n);

/// (-1)^n q^(-n(n+1)/2) sum_k [n k][n+k k] (-1)^k q^(k(k+1)/2 - nk) (xq;q)_k.
XLaurent legendre_expansion_shifted(long n);

/// sum_k [n k]^2 q^(k(k+1)/2 - nk) (-x)^k (xq;q)_(n-k).
XLaurent legendre_expansion_squared(long n);

/// (x;q)_N = sum_k [N k] (-x)^k q^(k(k-1)/2).
bool verify_q_binomial_theorem(long big_n);

/// sum_{k<=m} [m k][n k] q^((m-k)(n-k)) = [n+m m], for 0 <= m <= n.
bool verify_q_chu_vandermonde(long m, long n);

/// Modulo [p]^2 and every 0 <= k <= p-1:
/// (q;q^2)_k^2 / (q^2;q^2)_k^2 = (-1)^k [h k]_{q^2} [h+k k]_{q^2} q^(k^2 - kp), h = (p-1)/2.
bool verify_half_pochhammer_ratio(long p);

/// Closed form of sum_{k=j}^n (-1)^k [n+k k][n-j k-j] q^(k(k+1)/2 - nk) / (-q;q)_k,
/// which vanishes unless n = j (mod 2).
bool verify_alternating_legendre_sum(long n, long j);

/// The terminating q-Gauss evaluations with a = q^(n+j+1), b = q^(j-n), both in
/// the q^(k(k+1)/2) form and in the q^k form obtained by q -> 1/q.
bool verify_terminating_gauss(long n, long j);

/// Exponent of the q-power prefactor in the q^k form, (n+j+1)(n-j)/2 for n = j (mod 2).
long inverted_gauss_exponent(long n, long j);

/// F_n(x,q) = sum_k (-1)^k [n k][n+k k] (x;q)_k q^(k(k+1)/2 - nk) / (-q;q)_k
/// satisfies F_n(x,q) = (-1)^n F_n(-x,q); its x^j coefficient vanishes for n - j odd.
bool verify_shifted_legendre_symmetry(long n);

/// Modulo [p], with t = <-r/m>_p and s = (m t + r)/p:
/// (q^r;q^m)_k (q^(m-r);q^m)_k / (q^m;q^m)_k^2
///   = (-1)^k [t k]_{q^m} [t+k k]_{q^m} q^(mk(k-1)/2 - k(ps - r)).
/// Throws std::domain_error if p | m or the parameters are out of range.
bool verify_fractional_binomial_chain(long p, long m, long r, long k);

}  // namespace qcong
