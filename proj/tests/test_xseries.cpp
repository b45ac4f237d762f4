#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcong/arith.hpp"
#include "qcong/xseries.hpp"

using namespace qcong;

namespace {

QPoly P(std::initializer_list<long> c) { return QPoly::from_ints(c); }

// Each term rebuilt from whole Pochhammer products.
RingElem naive_term(const RingPtr& ctx, long m, long r, long k) {
  RingElem den = pochhammer(ctx, m, m, k);
  return pochhammer(ctx, r, m, k) * pochhammer(ctx, m - r, m, k) * inv(den * den);
}

// (x;q^m)_k by repeated multiplication with (1 - x q^(mj)).
XPoly product_x_pochhammer(const RingPtr& ctx, long m, long k) {
  XPoly acc(ctx, {ring_constant(ctx, 1)});
  for (long j = 0; j < k; ++j) {
    XPoly next(ctx);
    for (std::size_t i = 0; i < acc.coeffs().size(); ++i) {
      next.add_to(i, acc.coeffs()[i]);
      next.add_to(i + 1, -(acc.coeffs()[i] * qpow(ctx, m * j)));
    }
    acc = next;
  }
  return acc;
}

}  // namespace

TEST_CASE("congruent") {
  auto ctx = RingCtx::create(5, 2);
  XPoly a(ctx, {ring_constant(ctx, 1), reduce(ctx, P({0, 1}))});
  CHECK(congruent(a, a));
  XPoly zero(ctx);
  XPoly killed(ctx, {ring_constant(ctx, 0), reduce(ctx, ctx->modulus())});
  CHECK(congruent(zero, killed));

  XPoly b = a;
  b.add_to(3, ring_constant(ctx, 2));
  auto diff = first_difference(b, a);
  REQUIRE(diff.has_value());
  CHECK(diff->index == 3);
  CHECK(diff->difference == P({2}));

  auto other = RingCtx::create(7, 2);
  CHECK_THROWS_AS(congruent(a, XPoly(other)), ContextMismatch);
}

TEST_CASE("congruence is unchanged by adding multiples of [p]^r") {
  for (int r : {1, 2}) {
    auto ctx = RingCtx::create(7, r);
    XPoly lhs = sum_lhs_general(ctx, 3, 1);
    XPoly shifted(ctx);
    for (std::size_t k = 0; k < lhs.coeffs().size(); ++k) {
      QPoly bumped = lhs.coeffs()[k].rep() + ctx->modulus() * P({static_cast<long>(k), 1, -3});
      shifted.add_to(k, reduce(ctx, bumped));
    }
    CHECK(congruent(lhs, shifted));
    CHECK(congruent(shifted, lhs));
  }
}

TEST_CASE("sum_lhs_general low terms") {
  auto ctx = RingCtx::create(3, 2);
  XPoly lhs = sum_lhs_general(ctx, 2, 1);
  CHECK(lhs.coeff(0).is_one());
  RingElem d = reduce(ctx, P({1, 0, -1}));
  CHECK(lhs.coeff(1) == reduce(ctx, P({1, -1}) * P({1, -1})) * inv(d * d));
  CHECK(lhs.degree() <= 2);
  CHECK_THROWS_AS(sum_lhs_general(ctx, 3, 1), std::domain_error);
}

TEST_CASE("incremental terms equal naive terms") {
  for (int p : {3, 5, 7}) {
    for (int r : {1, 2}) {
      auto ctx = RingCtx::create(p, r);
      for (long m = 1; m <= 6; ++m) {
        if (m % p == 0) continue;
        for (long rr = 1; rr < m; ++rr) {
          auto terms = general_terms(ctx, m, rr, p - 1);
          for (long k = 0; k < p; ++k) CHECK(terms[static_cast<std::size_t>(k)] == naive_term(ctx, m, rr, k));
        }
      }
    }
  }
}

TEST_CASE("m = 1 collapses to a finite Legendre-type sum") {
  // For r <= p: sum_{k<=r-1} [r-1 k][r-1+k k] (-x)^k q^(k(k-1)/2 - k(r-1)).
  for (int p : {5, 7}) {
    auto ctx = RingCtx::create(p, 2);
    for (long r = 1; r <= p; ++r) {
      XPoly expected(ctx);
      for (long k = 0; k <= r - 1; ++k) {
        RingElem c = qbinom(ctx, r - 1, k, 1) * qbinom(ctx, r - 1 + k, k, 1) *
                     qpow(ctx, k * (k - 1) / 2 - k * (r - 1));
        expected.add_to(static_cast<std::size_t>(k), k % 2 == 0 ? c : -c);
      }
      CHECK(congruent(sum_lhs_general(ctx, 1, r), expected));
    }
  }
}

TEST_CASE("x_pochhammer by the q-binomial theorem matches the product") {
  auto ctx = RingCtx::create(7, 2);
  for (long m : {1L, 2L, 5L}) {
    for (long k = 0; k <= 8; ++k) CHECK(congruent(x_pochhammer(ctx, m, k), product_x_pochhammer(ctx, m, k)));
  }
}

TEST_CASE("sum_rhs_pochx") {
  for (int p : {3, 5, 7}) {
    auto ctx = RingCtx::create(p, 2);
    XPoly rhs = sum_rhs_pochx(ctx, 2, 1);
    CHECK(rhs.degree() <= p - 1);
    // (1;q^2)_k vanishes for k >= 1, so only the k = 0 term survives at x = 1.
    CHECK(substitute_x(rhs, ring_constant(ctx, 1)).is_one());
    // x = 0 leaves sum_k term_k q^(2k), built here term by term.
    RingElem at_zero = ring_constant(ctx, 0);
    for (long k = 0; k < p; ++k) at_zero += naive_term(ctx, 2, 1, k) * qpow(ctx, 2 * k);
    CHECK(rhs.coeff(0) == at_zero);
    CHECK(substitute_x(rhs, ring_constant(ctx, 0)) == at_zero);
  }
}

TEST_CASE("sum_tauraso_rhs") {
  auto c3 = RingCtx::create(3, 2);
  XPoly t3 = sum_tauraso_rhs(c3);
  CHECK(t3.degree() == 1);
  CHECK(t3.coeff(0).is_one());
  for (int p : {3, 5, 7}) {
    auto ctx = RingCtx::create(p, 2);
    CHECK(congruent(sum_tauraso_rhs(ctx), sum_square_expansion(ctx, 2, (p - 1) / 2)));
  }
  auto c5 = RingCtx::create(5, 2);
  CHECK(congruent(sum_lhs_general(c5, 2, 1), sum_tauraso_rhs(c5)));
}

TEST_CASE("terms past (p-1)/2 vanish modulo [p]^2 for m = 2, r = 1") {
  for (int p : {3, 5, 7, 11}) {
    auto ctx = RingCtx::create(p, 2);
    auto terms = general_terms(ctx, 2, 1, p - 1);
    for (long k = (p + 1) / 2; k < p; ++k) CHECK(terms[static_cast<std::size_t>(k)].is_zero());
    for (long k = 0; k <= (p - 1) / 2; ++k) CHECK(!terms[static_cast<std::size_t>(k)].is_zero());
  }
}

TEST_CASE("(q^m;q^m)_k is a unit for k <= p-1 when p does not divide m") {
  for (int p : {3, 5, 7}) {
    auto ctx = RingCtx::create(p, 1);
    for (long m = 1; m <= 8; ++m) {
      if (m % p == 0) continue;
      for (long k = 0; k < p; ++k) CHECK(pochhammer(ctx, m, m, k).is_unit());
    }
  }
}

TEST_CASE("sum_P_nmr") {
  auto ctx = RingCtx::create(5, 1);
  XPoly p0 = sum_P_nmr(ctx, 2, 1, 0);
  CHECK(p0.degree() == 0);
  CHECK(p0.coeff(0).is_one());

  // (-1;q^2)_k / (-q^2;q^2)_k = 2 / (1 + q^(2k)), cleared of denominators.
  for (long k = 1; k <= 10; ++k) {
    QPoly num = 1, den = 1;
    for (long j = 0; j < k; ++j) num *= P({1}) + QPoly::monomial(1, static_cast<std::size_t>(2 * j));
    for (long j = 1; j <= k; ++j) den *= P({1}) + QPoly::monomial(1, static_cast<std::size_t>(2 * j));
    CHECK(num * (P({1}) + QPoly::monomial(1, static_cast<std::size_t>(2 * k))) == den * QPoly(2));
  }

  // <-1/2>_5 = 2, so P_{4,2,1}(q,x) = P_{4,2,1}(q,-x) modulo [5].
  XPoly full = sum_P_nmr(ctx, 2, 1, 4);
  CHECK(least_nonneg_residue(-1, 2, 5) == 2);
  CHECK(congruent(full, full.negate_x()));
}

TEST_CASE("substitute_x") {
  auto ctx = RingCtx::create(5, 2);
  XPoly a(ctx, {reduce(ctx, P({3, 1})), ring_constant(ctx, 7), reduce(ctx, P({0, 0, 1}))});
  CHECK(substitute_x(a, ring_constant(ctx, 0)) == a.coeff(0));
  XPoly one_plus_x(ctx, {ring_constant(ctx, 1), ring_constant(ctx, 1)});
  CHECK(substitute_x(one_plus_x, ring_constant(ctx, 1)) == ring_constant(ctx, 2));
  const RingElem v = reduce(ctx, P({1, 2}));
  CHECK(substitute_x(a, v) == a.coeff(0) + a.coeff(1) * v + a.coeff(2) * v * v);
}
