#pragma once

#include "qcong/record.hpp"

namespace qcong {

// Named q-congruence checks at one parameter tuple. Every check returns a
// CheckRecord: hypotheses that fail give `inapplicable`, a mismatch gives
// `fail` with the first witness, and an unexpected non-unit or non-integral
// exponent gives `error`. Ring arithmetic is exact, so there is no tolerance.
//
// Throughout t = <-r/m>_p and sigma = (-1)^t.

/// (-1)^<-1/3>_p = (-3/p), (-1)^<-1/4>_p = (-2/p), (-1)^<-1/6>_p = (-1/p); p >= 5.
CheckRecord verify_sign_identities(long p);

// --- modulo [p]^2, base q^2 ------------------------------------------------

/// sum_k (q;q^2)_k^2/(q^2;q^2)_k^2 x^k against the Tauraso-type right side.
CheckRecord check_q_tauraso(long p);
/// x = 1: sum ~ (-1/p) q^((1-p^2)/4).
CheckRecord check_q_rv16(long p);
/// sum x^k ~ (-1/p) q^((1-p^2)/4) sum q^(2k) (x;q^2)_k.
CheckRecord check_q_rv16_pochx(long p);
/// sum q^(2k) ~ (-1/p) q^((p^2-1)/4).
CheckRecord check_q_rv16_dual(long p);
/// P_{p-1,2,1}(q,x) ~ (-1/p) P_{p-1,2,1}(q,-x).
CheckRecord check_q_half_legendre_symmetry(long p);
/// sum 2 q^(2k) / (1 + q^(2k)) ~ (-1/p).
CheckRecord check_q_rv16_alt(long p);
/// For p = 3 (mod 4): sum q^(2k) / (-q^2;q^2)_k ~ 0.
CheckRecord check_q_beukers_vanishing(long p);

// --- modulo [p], general (m, r) ---------------------------------------------

/// sum x^k ~ sigma q^(-m t(t+1)/2) sum q^(mk) (x;q^m)_k; when p = +-1 (mod m)
/// also with the exponent r(m-r)(1-p^2)/(2m).
CheckRecord check_q_general_pochx(long p, long m, long r);
/// The x = 1 and x = 0 forms for (m, r) = (3,1), (4,1), (6,1); p >= 5.
CheckRecord check_q_rv_mod_p(long p);
/// sum x^k ~ sum_{k<=t} [t k]^2 q^(mk(k-1)/2 - mkt) (-x)^k (x;q^m)_(t-k).
CheckRecord check_q_general_square_expansion(long p, long m, long r);
/// P_{p-1,m,r}(q,x) ~ sigma P_{p-1,m,r}(q,-x).
CheckRecord check_q_general_legendre_symmetry(long p, long m, long r);
/// x = 0 vanishing when t is odd, x = -1 evaluation, and their Legendre-symbol
/// forms for (m, r) = (3,1), (4,1), (6,1).
CheckRecord check_q_legendre_specializations(long p);

// --- conjectural, modulo [p]^2 ----------------------------------------------

/// The four x = 1 sums for m = 2, 3, 4, 6; p >= 5.
CheckRecord check_conj_q_rv_p2(long p);
/// The three x = 0 sums for m = 3, 4, 6; p >= 5.
CheckRecord check_conj_q_rv_dual_p2(long p);
/// P_{p-1,m,r}(q,x) ~ sigma P_{p-1,m,r}(q,-x) modulo [p]^2.
CheckRecord check_conj_q_legendre_symmetry_p2(long p, long m, long r);

/// Test hook: while set, every Legendre symbol used as an expected sign is
/// negated. Used by the suite to prove that a sign bug is caught.
void set_sign_fault(bool enabled);
bool sign_fault();

}  // namespace qcong
