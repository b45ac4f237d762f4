#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcong/arith.hpp"
#include "qcong/ring.hpp"
#include "test_util.hpp"

using namespace qcong;

namespace {

QPoly P(std::initializer_list<long> c) { return QPoly::from_ints(c); }
QPoly Q(std::size_t e) { return QPoly::monomial(1, e); }

// q^n modulo [p]^2 from q^(p k) = 1 + k (q - 1)[p], independent of qpow.
QPoly closed_form_qpow(int p, long n) {
  const long n0 = floor_mod(n, p);
  const long k = (n - n0) / p;
  return Q(static_cast<std::size_t>(n0)) * (QPoly(1) + QPoly(k) * P({-1, 1}) * q_integer(p));
}

}  // namespace

TEST_CASE("context construction") {
  auto ctx = RingCtx::create(5, 2);
  CHECK(ctx->modulus() == q_integer(5) * q_integer(5));
  CHECK(ctx->rep_degree_bound() == 8);
  CHECK_THROWS_AS(RingCtx::create(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(RingCtx::create(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(RingCtx::create(5, 0), std::invalid_argument);
}

TEST_CASE("reduce") {
  auto c31 = RingCtx::create(3, 1);
  auto c32 = RingCtx::create(3, 2);
  CHECK(reduce(c31, Q(3)).rep() == P({1}));
  // deg 3 < 4 already; q^3 = 1 + (q - 1)(1 + q + q^2).
  CHECK(reduce(c32, Q(3)).rep() == Q(3));
  CHECK(reduce(c32, Q(3)).rep() == P({1}) + P({-1, 1}) * q_integer(3));
  CHECK(reduce(c32, Q(4)).rep() == P({-1, -2, -3, -2}));
  const QPoly small = P({2, 0, -1, 5});
  CHECK(reduce(c32, small).rep() == small);
}

TEST_CASE("inv") {
  auto ctx = RingCtx::create(3, 2);
  const RingElem one = ring_constant(ctx, 1);
  CHECK(inv(one) == one);
  const RingElem q = reduce(ctx, Q(1));
  const RingElem qi = inv(q);
  CHECK(qi * q == one);
  CHECK(qi.rep() == P({-2, -3, -2, -1}));  // sympy invert(q, (1+q+q^2)^2)
  CHECK(qi == reduce(ctx, Q(2) * (P({1}) - P({-1, 1}) * q_integer(3))));
  CHECK_THROWS_AS(inv(reduce(ctx, q_integer(3))), NotAUnit);
  CHECK_THROWS_AS(inv(ring_constant(ctx, 0)), NotAUnit);
}

TEST_CASE("inv is two-sided; NotAUnit exactly on multiples of [p]") {
  std::mt19937 rng(99);
  for (int p : {3, 5, 7}) {
    for (int r : {1, 2}) {
      auto ctx = RingCtx::create(p, r);
      const RingElem one = ring_constant(ctx, 1);
      for (int trial = 0; trial < 20; ++trial) {
        QPoly a = testutil::random_qpoly(rng, 2 * p);
        if (trial % 4 == 0) a *= q_integer(p);
        const RingElem u = reduce(ctx, a);
        const bool shares = ext_gcd(u.rep().is_zero() ? q_integer(p) : u.rep(), q_integer(p)).gcd.degree() > 0;
        CHECK(u.is_unit() == !shares);
        if (shares) {
          CHECK_THROWS_AS(inv(u), NotAUnit);
        } else {
          const RingElem v = inv(u);
          CHECK(u * v == one);
          CHECK(v * u == one);
        }
      }
    }
  }
}

TEST_CASE("qpow") {
  auto c51 = RingCtx::create(5, 1);
  auto c52 = RingCtx::create(5, 2);
  CHECK(qpow(c52, 0).is_one());
  CHECK(qpow(c51, 5).is_one());
  CHECK((qpow(c52, -6) * qpow(c52, 6)).is_one());
  CHECK(!qpow(c52, 5).is_one());
}

TEST_CASE("qpow agrees with the closed form q^(pk) = 1 + k(q-1)[p]") {
  for (int p : {3, 5, 7, 11, 13}) {
    auto ctx = RingCtx::create(p, 2);
    CHECK(qpow(ctx, p) == reduce(ctx, P({1}) + P({-1, 1}) * q_integer(p)));
    for (long n = -2L * p * p; n <= 2L * p * p; n += (p < 7 ? 1 : 7)) {
      CHECK(qpow(ctx, n) == reduce(ctx, closed_form_qpow(p, n)));
    }
  }
}

TEST_CASE("q has no finite order modulo [p]^2") {
  for (int p : {3, 5, 7}) {
    auto ctx = RingCtx::create(p, 2);
    std::vector<QPoly> reps;
    for (long f = -p * p; f <= p * p; ++f) reps.push_back(qpow(ctx, f).rep());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        if (reps[i] == reps[j]) FAIL("q^f = q^g with f != g for p=" << p);
      }
    }
  }
}

TEST_CASE("pochhammer") {
  auto c52 = RingCtx::create(5, 2);
  CHECK(pochhammer(c52, 3, 2, 0).is_one());
  CHECK(pochhammer(c52, 1, 2, 2) == reduce(c52, P({1, -1}) * (P({1}) - Q(3))));
  // Negative starting exponent: (q^-1;q^2)_2 = (1 - q^-1)(1 - q).
  CHECK(pochhammer(c52, -1, 2, 2) == (ring_constant(c52, 1) - qpow(c52, -1)) * reduce(c52, P({1, -1})));

  auto c51 = RingCtx::create(5, 1);
  for (int k = 1; k <= 4; ++k) {
    // Every factor 1 - q^(2j), j <= 4, is coprime to [5].
    for (int j = 1; j <= k; ++j) {
      CHECK(ext_gcd(P({1}) - Q(static_cast<std::size_t>(2 * j)), q_integer(5)).gcd == P({1}));
    }
    CHECK(pochhammer(c51, 2, 2, k).is_unit());
  }
  CHECK(!pochhammer(c51, 2, 2, 5).is_unit());  // contains 1 - q^10

  for (long a : {-3L, 1L, 4L}) {
    for (long k = 0; k < 6; ++k) {
      CHECK(pochhammer(c52, a, 3, k + 1) == pochhammer(c52, a, 3, k) * (ring_constant(c52, 1) - qpow(c52, a + 3 * k)));
    }
  }
}

TEST_CASE("qbinom") {
  auto ctx = RingCtx::create(7, 2);
  CHECK(qbinom(ctx, 5, 0, 3).is_one());
  CHECK(qbinom(ctx, 2, 1, 1) == reduce(ctx, P({1, 1})));
  CHECK(qbinom(ctx, 4, 2, 1) == reduce(ctx, P({1, 1, 2, 1, 1})));
  CHECK(qbinom(ctx, 4, 5, 1).is_zero());
  CHECK(qbinom(ctx, 4, -1, 1).is_zero());

  for (long m : {1L, 2L, 3L}) {
    for (long n = 1; n <= 9; ++n) {
      for (long k = 0; k <= n; ++k) {
        const RingElem lhs = qbinom(ctx, n, k, m);
        CHECK(lhs == qbinom(ctx, n, n - k, m));
        CHECK(lhs == qbinom(ctx, n - 1, k - 1, m) + qpow(ctx, m * k) * qbinom(ctx, n - 1, k, m));
        CHECK(lhs == qpow(ctx, m * (n - k)) * qbinom(ctx, n - 1, k - 1, m) + qbinom(ctx, n - 1, k, m));
      }
    }
  }
}

TEST_CASE("solve_q_power") {
  auto c72 = RingCtx::create(7, 2);
  auto s = solve_q_power(qpow(c72, 5));
  CHECK(s.exponent == 5);
  CHECK(!s.mod_p_only);
  CHECK(solve_q_power(qpow(c72, -12)).exponent == -12);

  auto c31 = RingCtx::create(3, 1);
  // q^0, q^1, q^2 modulo [3] are 1, q, -1 - q; none equals 1 + q.
  CHECK(reduce(c31, Q(2)).rep() == P({-1, -1}));
  CHECK_THROWS_AS(solve_q_power(reduce(c31, P({1, 1}))), NotAPowerOfQ);

  auto r1 = solve_q_power(qpow(c31, 8));
  CHECK(r1.exponent == 2);
  CHECK(r1.mod_p_only);

  // 2q^3 is q^3 mod [p] but the quotient step fails.
  CHECK_THROWS_AS(solve_q_power(reduce(c72, Q(3) * Rational(2))), NotAPowerOfQ);
  // q^5 (1 + (1/2)(q-1)[7]) has a non-integer quotient.
  CHECK_THROWS_AS(
      solve_q_power(reduce(c72, Q(5) * (P({1}) + QPoly(Rational(1, 2)) * P({-1, 1}) * q_integer(7)))),
      NotAPowerOfQ);
}

TEST_CASE("solve_q_power inverts qpow on [-p^2, p^2]") {
  for (int p : {3, 5, 7}) {
    auto ctx = RingCtx::create(p, 2);
    for (long f = -p * p; f <= p * p; ++f) CHECK(solve_q_power(qpow(ctx, f)).exponent == f);
  }
}

TEST_CASE("ring mismatch") {
  auto a = RingCtx::create(5, 1), b = RingCtx::create(7, 1);
  CHECK_THROWS_AS(ring_constant(a, 1) + ring_constant(b, 1), ContextMismatch);
  // Same parameters from separate create() calls interoperate.
  CHECK(ring_constant(a, 2) == ring_constant(RingCtx::create(5, 1), 2));
}
