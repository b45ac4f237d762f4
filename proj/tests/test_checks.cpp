#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcong/arith.hpp"
#include "qcong/checks.hpp"
#include "qcong/ring.hpp"
#include "qcong/xseries.hpp"

using namespace qcong;

namespace {

QPoly qmono(std::size_t e) { return QPoly::monomial(1, e); }

/// (q^a;q^step)_k over Q[q], a >= 1.
QPoly poch(long a, long step, long k) {
  QPoly out(1);
  for (long j = 0; j < k; ++j) out *= QPoly(1) - qmono(static_cast<std::size_t>(a + j * step));
  return out;
}

/// Oracle that never touches RingElem: sum_k (q;q^2)_k^2 q^(shift k) / (q^2;q^2)_k^2
/// over the common denominator D = (q^2;q^2)_(p-1)^2, as numerator N.
std::pair<QPoly, QPoly> rv16_fraction(long p, long shift) {
  QPoly num;
  for (long k = 0; k <= p - 1; ++k) {
    QPoly a = poch(1, 2, k);
    QPoly rest = poch(2 * k + 2, 2, p - 1 - k);
    num += a * a * rest * rest * qmono(static_cast<std::size_t>(shift * k));
  }
  QPoly den = poch(2, 2, p - 1);
  return {num, den * den};
}

/// N / D = c q^e modulo [p]^2 with e possibly negative.
bool fraction_congruent(const QPoly& num, const QPoly& den, long c, long e, long p) {
  QPoly mod = q_integer(static_cast<int>(p));
  mod = mod * mod;
  QPoly diff = e >= 0 ? num - den * qmono(static_cast<std::size_t>(e)) * Rational(c)
                      : num * qmono(static_cast<std::size_t>(-e)) - den * Rational(c);
  return remainder(diff, mod).is_zero();
}

bool passes(const CheckRecord& r) { return r.status == Status::pass; }

}  // namespace

TEST_CASE("least nonnegative residue and Legendre symbol") {
  CHECK(least_nonneg_residue(-1, 2, 7) == 3);
  CHECK(least_nonneg_residue(0, 1, 11) == 0);
  for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
    CHECK(least_nonneg_residue(-1, 3, p) == (p % 3 == 1 ? (p - 1) / 3 : (2 * p - 1) / 3));
  }
  CHECK_THROWS_AS(least_nonneg_residue(1, 14, 7), std::domain_error);
  CHECK(legendre_symbol(1, 7) == 1);
  CHECK(legendre_symbol(-1, 7) == -1);
  CHECK(legendre_symbol(-3, 7) == 1);
  CHECK(legendre_symbol(14, 7) == 0);
  for (long p = 3; p <= 97; p += 2) {
    if (!is_prime(p)) continue;
    CHECK(legendre_symbol(-1, p) == legendre_minus_one(p));
    CHECK(legendre_symbol(-2, p) == legendre_minus_two(p));
    CHECK(legendre_symbol(-3, p) == legendre_minus_three(p));
    for (long a = 1; a < p; ++a) {
      // Quadratic residues by enumeration.
      bool square = false;
      for (long y = 1; y < p && !square; ++y) square = (y * y) % p == a;
      CHECK(legendre_symbol(a, p) == (square ? 1 : -1));
      CHECK(legendre_symbol(a * 3, p) == legendre_symbol(a, p) * legendre_symbol(3, p));
    }
  }
}

TEST_CASE("sign identities") {
  CHECK(passes(verify_sign_identities(5)));
  CHECK(passes(verify_sign_identities(7)));
  CHECK(verify_sign_identities(3).status == Status::inapplicable);
  for (long p = 5; p < 200; p += 2) {
    if (is_prime(p)) CHECK(passes(verify_sign_identities(p)));
  }
}

TEST_CASE("q-rv16 against a fraction oracle") {
  // p = 3: (-1/3) = -1 and (1 - 9)/4 = -2.
  auto [n3, d3] = rv16_fraction(3, 0);
  CHECK(fraction_congruent(n3, d3, -1, -2, 3));
  CHECK_FALSE(fraction_congruent(n3, d3, 1, -2, 3));
  // p = 5: (-1/5) = 1, exponent -6.
  auto [n5, d5] = rv16_fraction(5, 0);
  CHECK(fraction_congruent(n5, d5, 1, -6, 5));
  // The dual sum with q^(2k): exponents flip sign.
  auto [m5, e5] = rv16_fraction(5, 2);
  CHECK(fraction_congruent(m5, e5, 1, 6, 5));
  auto [m7, e7] = rv16_fraction(7, 2);
  CHECK(fraction_congruent(m7, e7, -1, 12, 7));

  CHECK(passes(check_q_rv16(3)));
  CHECK(passes(check_q_rv16(5)));
  CHECK(passes(check_q_rv16(11)));
  CHECK(passes(check_q_rv16_dual(3)));
  CHECK(passes(check_q_rv16_dual(5)));
}

TEST_CASE("modulus [p]^2 family") {
  for (long p : {3L, 5L, 13L}) CHECK(passes(check_q_tauraso(p)));
  for (long p : {3L, 7L}) CHECK(passes(check_q_rv16_pochx(p)));
  for (long p : {3L, 5L}) CHECK(passes(check_q_half_legendre_symmetry(p)));
  for (long p : {3L, 5L, 13L}) CHECK(passes(check_q_rv16_alt(p)));
  CHECK(passes(check_q_beukers_vanishing(7)));
  CHECK(passes(check_q_beukers_vanishing(3)));
  CHECK(check_q_beukers_vanishing(5).status == Status::inapplicable);

  const auto rec = check_q_tauraso(5);
  CHECK(rec.params.modulus_power == 2);
  CHECK_FALSE(rec.conjectural);
  CHECK_FALSE(rec.witness.has_value());
}

TEST_CASE("x = 1 and x = 0 specializations are coherent") {
  for (long p : {3L, 5L, 7L}) {
    auto ctx = RingCtx::create(static_cast<int>(p), 2);
    const XPoly rhs = sum_rhs_pochx(ctx, 2, 1);
    // (1;q^2)_k vanishes for k >= 1, so only k = 0 survives at x = 1.
    CHECK(substitute_x(rhs, ring_constant(ctx, 1)).is_one());
    // At x = 0 the right side is the dual sum.
    RingElem dual = ring_constant(ctx, 0);
    const auto terms = general_terms(ctx, 2, 1, p - 1);
    for (long k = 0; k < p; ++k) dual += terms[static_cast<std::size_t>(k)] * qpow(ctx, 2 * k);
    CHECK(substitute_x(rhs, ring_constant(ctx, 0)) == dual);
    CHECK(passes(check_q_rv16_pochx(p)) == passes(check_q_rv16(p)));
    CHECK(passes(check_q_rv16_pochx(p)) == passes(check_q_rv16_dual(p)));
  }
  // x = 0 coefficient of the half-Legendre polynomial vanishes for p = 7.
  auto ctx = RingCtx::create(7, 2);
  CHECK(sum_P_nmr(ctx, 2, 1, 6).coeff(0).is_zero());
}

TEST_CASE("modulus [p] family, spec tuples") {
  CHECK(passes(check_q_general_pochx(5, 3, 1)));
  CHECK(passes(check_q_general_pochx(7, 4, 1)));
  const auto skipped = check_q_general_pochx(7, 5, 2);
  CHECK(passes(skipped));
  CHECK(skipped.params.extra.at("closed_exponent") == "skipped");
  CHECK(check_q_general_pochx(7, 3, 1).params.extra.at("closed_exponent") == "checked");
  CHECK(check_q_general_pochx(5, 10, 1).status == Status::inapplicable);

  CHECK(passes(check_q_general_square_expansion(5, 2, 1)));
  CHECK(passes(check_q_general_square_expansion(7, 3, 2)));
  CHECK(passes(check_q_general_square_expansion(11, 7, 3)));

  CHECK(passes(check_q_general_legendre_symmetry(5, 3, 1)));
  CHECK(passes(check_q_general_legendre_symmetry(7, 6, 5)));
  CHECK(check_q_general_legendre_symmetry(3, 3, 1).status == Status::inapplicable);

  for (long p : {5L, 7L, 11L}) CHECK(passes(check_q_rv_mod_p(p)));
  CHECK(check_q_rv_mod_p(3).status == Status::inapplicable);

  for (long p : {3L, 5L, 7L, 11L}) CHECK(passes(check_q_legendre_specializations(p)));
  CHECK(check_q_legendre_specializations(5).params.extra.at("vanishing_m") == "3,4");
  CHECK(check_q_legendre_specializations(7).params.extra.at("vanishing_m") == "4,6");
  CHECK(check_q_legendre_specializations(11).params.extra.at("vanishing_m") == "3,6");
}

TEST_CASE("small sweep of the general checks") {
  for (long p : {3L, 5L, 7L}) {
    for (long m = 1; m <= 5; ++m) {
      for (long r = 1; r <= 2 * m; ++r) {
        const auto a = check_q_general_pochx(p, m, r);
        const auto b = check_q_general_square_expansion(p, m, r);
        const auto c = check_q_general_legendre_symmetry(p, m, r);
        if (m % p == 0) {
          CHECK(a.status == Status::inapplicable);
          continue;
        }
        CHECK_MESSAGE(passes(a), p, " ", m, " ", r);
        CHECK_MESSAGE(passes(b), p, " ", m, " ", r);
        CHECK_MESSAGE(passes(c), p, " ", m, " ", r);
      }
    }
  }
}

TEST_CASE("conjectural checks are labelled and pass at small p") {
  const auto a = check_conj_q_rv_p2(5);
  CHECK(a.conjectural);
  CHECK(passes(a));
  CHECK(passes(check_conj_q_rv_p2(7)));
  CHECK(check_conj_q_rv_p2(3).status == Status::inapplicable);
  CHECK(passes(check_conj_q_rv_dual_p2(5)));
  CHECK(passes(check_conj_q_rv_dual_p2(7)));
  CHECK(passes(check_conj_q_legendre_symmetry_p2(5, 2, 1)));
  CHECK(passes(check_conj_q_legendre_symmetry_p2(7, 3, 1)));
  CHECK(check_conj_q_legendre_symmetry_p2(7, 3, 1).conjectural);
}

TEST_CASE("injected sign fault produces a witness") {
  set_sign_fault(true);
  const auto bad = check_q_rv16(5);
  const auto bad_sign = verify_sign_identities(7);
  set_sign_fault(false);
  REQUIRE(bad.status == Status::fail);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->label == "x=1");
  CHECK(bad.witness->index == 0);
  // LHS - (-q^-6) = 2 q^-6 when the true value is q^-6.
  auto ctx = RingCtx::create(5, 2);
  CHECK(bad.witness->difference == (qpow(ctx, -6) * Rational(2)).rep());
  CHECK(bad_sign.status == Status::fail);
  CHECK(passes(check_q_rv16(5)));
}

TEST_CASE("record JSON round trip") {
  set_sign_fault(true);
  CheckRecord rec = check_q_general_pochx(7, 3, 1);
  CheckRecord bad = check_q_rv16(7);
  set_sign_fault(false);
  rec.note = "x";
  for (const CheckRecord& r : {rec, bad}) {
    const std::string line = to_json_line(r, false);
    CHECK(line.find('\n') == std::string::npos);
    CHECK(line.find("elapsed") == std::string::npos);
    const CheckRecord back = parse_json_line(line);
    CHECK(back.check_id == r.check_id);
    CHECK(back.params == r.params);
    CHECK(back.status == r.status);
    CHECK(back.witness == r.witness);
    CHECK(back.note == r.note);
    CHECK(to_json_line(back, false) == line);
  }
  CHECK(to_json_line(rec, true).find("elapsed_ms") != std::string::npos);
  CHECK(to_json_line(bad, false).find(R"("check_id":"q-rv16","p":7,"modulus_power":2,"status":"fail")") == 1);
  CHECK_THROWS_AS(parse_json_line("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json_line(R"({"check_id":"a","p":3,"status":"maybe"})"), std::invalid_argument);

  // Sparse witness keys follow exponent order, not string order.
  std::vector<Rational> c(12, Rational(0));
  c[2] = make_rational(1, 2);
  c[10] = -3;
  const auto terms = sparse_terms(QPoly(c));
  REQUIRE(terms.size() == 2);
  CHECK(terms.begin()->first == 2);
  CHECK(terms.at(10) == "-3");
}
