#include "qcong/classical.hpp"

#include <functional>
#include <stdexcept>
#include <string>

#include "qcong/arith.hpp"
#include "qcong/qpoly.hpp"

namespace qcong {

ModP2Int::ModP2Int(std::int64_t p, std::int64_t value) : p_(p), value_(floor_mod(value, p * p)) {}

ModP2Int ModP2Int::from_rational(const Rational& value, std::int64_t p) {
  const BigInt mod = p * p;
  if (mpz_divisible_ui_p(value.get_den().get_mpz_t(), static_cast<unsigned long>(p))) {
    throw std::domain_error("denominator of " + to_string(value) + " is divisible by " + std::to_string(p));
  }
  BigInt num = value.get_num() % mod;
  BigInt den = value.get_den() % mod;
  const std::int64_t n = num.get_si();
  const std::int64_t d = den.get_si();
  return {p, static_cast<std::int64_t>((static_cast<__int128>(floor_mod(n, p * p)) * mod_inverse(d, p * p)) % (p * p))};
}

std::int64_t ModP2Int::centered() const {
  const std::int64_t m = modulus();
  return value_ > m / 2 ? value_ - m : value_;
}

void ModP2Int::same_modulus(const ModP2Int& o) const {
  if (p_ != o.p_) throw std::invalid_argument("mixing residues modulo different primes");
}

ModP2Int& ModP2Int::operator+=(const ModP2Int& o) {
  same_modulus(o);
  value_ = (value_ + o.value_) % modulus();
  return *this;
}

ModP2Int& ModP2Int::operator-=(const ModP2Int& o) {
  same_modulus(o);
  value_ = floor_mod(value_ - o.value_, modulus());
  return *this;
}

ModP2Int& ModP2Int::operator*=(const ModP2Int& o) {
  same_modulus(o);
  value_ = static_cast<std::int64_t>(static_cast<__int128>(value_) * o.value_ % modulus());
  return *this;
}

std::vector<Rational> rv_terms(int base, long n) {
  // term_{k+1} / term_k as (numerator, denominator) in k.
  std::function<Rational(long)> ratio;
  switch (base) {
    case 16: ratio = [](long k) { return Rational(make_rational((2 * k + 1) * (2 * k + 1), (2 * k + 2) * (2 * k + 2))); }; break;
    case 27: ratio = [](long k) { return Rational(make_rational((3 * k + 1) * (3 * k + 2), 9 * (k + 1) * (k + 1))); }; break;
    case 64: ratio = [](long k) { return Rational(make_rational((4 * k + 1) * (4 * k + 3), 16 * (k + 1) * (k + 1))); }; break;
    case 432: ratio = [](long k) { return Rational(make_rational((6 * k + 1) * (6 * k + 5), 36 * (k + 1) * (k + 1))); }; break;
    default: throw std::invalid_argument("base must be 16, 27, 64 or 432");
  }
  std::vector<Rational> out;
  Rational term = 1;
  for (long k = 0; k <= n; ++k) {
    out.push_back(term);
    term *= ratio(k);
  }
  return out;
}

std::vector<Rational> sun_terms(const Rational& a, long n) {
  // C(a,k+1) = C(a,k)(a-k)/(k+1), C(-1-a,k+1) = C(-1-a,k)(-1-a-k)/(k+1).
  std::vector<Rational> out;
  Rational term = 1;
  for (long k = 0; k <= n; ++k) {
    out.push_back(term);
    const Rational num = (a - k) * (-1 - a - k);
    term *= num / Rational((k + 1) * (k + 1));
  }
  return out;
}

namespace {

struct Inapplicable {
  std::string why;
};

CheckRecord run(std::string id, CheckParams params, const std::function<void(CheckRecord&)>& body) {
  CheckRecord rec;
  rec.check_id = std::move(id);
  rec.params = std::move(params);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(rec);
  } catch (const Inapplicable& e) {
    rec.status = Status::inapplicable;
    rec.note = e.why;
  } catch (const std::exception& e) {
    rec.status = Status::error;
    rec.note = e.what();
  }
  rec.elapsed = std::chrono::steady_clock::now() - start;
  return rec;
}

CheckParams params(long p) {
  CheckParams out;
  out.p = p;
  out.modulus_power = 2;
  return out;
}

void require_odd_prime(long p) {
  if (p < 3 || !is_prime(p)) throw Inapplicable{"p must be an odd prime"};
}

/// Records a mismatch lhs != rhs (mod p^2) with the centered difference.
void compare(CheckRecord& rec, const std::string& label, const ModP2Int& lhs, const ModP2Int& rhs) {
  if (rec.status == Status::fail || lhs == rhs) return;
  rec.status = Status::fail;
  rec.witness = Witness{label, 0, QPoly((lhs - rhs).centered())};
}

ModP2Int reduce_sum(const std::vector<Rational>& terms, long p) {
  Rational sum = 0;
  for (const auto& t : terms) sum += t;
  return ModP2Int::from_rational(sum, p);
}

Rational rpow(const Rational& base, long e) {
  Rational out = 1;
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// C(2k,k)^e / base^k summed over k < p.
ModP2Int central_power_sum(long p, int e, long base) {
  // term_k = C(2k,k)^e / base^k, stepped by (2(2k+1)/(k+1))^e / base.
  Rational sum = 0;
  Rational term = 1;
  for (long k = 0; k <= p - 1; ++k) {
    sum += term;
    const Rational ratio = make_rational(2 * (2 * k + 1), k + 1);
    term *= rpow(ratio, e) / Rational(base);
  }
  return ModP2Int::from_rational(sum, p);
}

}  // namespace

CheckRecord check_rv(long p, int base) {
  CheckParams pr = params(p);
  pr.extra["base"] = std::to_string(base);
  return run("classical-rv", pr, [&](CheckRecord& rec) {
    require_odd_prime(p);
    if (p < 5) throw Inapplicable{"needs p >= 5"};
    long d = 0;
    switch (base) {
      case 16: d = -1; break;
      case 27: d = -3; break;
      case 64: d = -2; break;
      case 432: d = -1; break;
      default: throw std::invalid_argument("base must be 16, 27, 64 or 432");
    }
    compare(rec, "sum", reduce_sum(rv_terms(base, p - 1), p), ModP2Int(p, legendre_symbol(d, p)));
  });
}

CheckRecord check_tauraso(long p, long x) {
  CheckParams pr = params(p);
  pr.extra["x"] = std::to_string(x);
  return run("classical-tauraso", pr, [&](CheckRecord& rec) {
    require_odd_prime(p);
    const auto terms = rv_terms(16, p - 1);
    Rational lhs = 0;
    Rational xk = 1;
    for (const auto& t : terms) {
      lhs += t * xk;
      xk *= x;
    }
    const long h = (p - 1) / 2;
    Rational rhs = 0;
    for (long k = 0; k <= h; ++k) {
      const Rational b(binomial(h, k));
      rhs += b * b * rpow(Rational(-x), k) * rpow(Rational(1 - x), h - k);
    }
    compare(rec, "sum", ModP2Int::from_rational(lhs, p), ModP2Int::from_rational(rhs, p));
  });
}

CheckRecord check_sun_legendre(long p, long m, long r, long x) {
  CheckParams pr = params(p);
  pr.m = m;
  pr.r = r;
  pr.extra["x"] = std::to_string(x);
  return run("classical-sun-legendre", pr, [&](CheckRecord& rec) {
    require_odd_prime(p);
    if (m < 1 || r < 1) throw Inapplicable{"needs positive m and r"};
    if (m % p == 0) throw Inapplicable{"p divides m"};
    const Rational a = make_rational(-r, m);
    const long sign = sign_pow(least_nonneg_residue(-r, m, p));
    const auto terms = sun_terms(a, p - 1);
    // P_{p-1}(a,y) = sum C(a,k)C(-1-a,k) ((1-y)/2)^k.
    auto legendre_at = [&](long y) {
      Rational acc = 0;
      const Rational step = make_rational(1 - y, 2);
      Rational pw = 1;
      for (const auto& t : terms) {
        acc += t * pw;
        pw *= step;
      }
      return acc;
    };
    compare(rec, "symmetry", ModP2Int::from_rational(legendre_at(x), p),
            ModP2Int::from_rational(Rational(sign) * legendre_at(-x), p));
    Rational diff = 0;
    Rational xk = 1, yk = 1;
    for (const auto& t : terms) {
      diff += t * (xk - Rational(sign) * yk);
      xk *= x;
      yk *= 1 - x;
    }
    compare(rec, "difference sum", ModP2Int::from_rational(diff, p), ModP2Int(p, 0));
  });
}

CheckRecord check_32k(long p) {
  return run("classical-32k", params(p), [&](CheckRecord& rec) {
    require_odd_prime(p);
    if (p % 4 != 3) throw Inapplicable{"needs p = 3 (mod 4)"};
    compare(rec, "sum", central_power_sum(p, 2, 32), ModP2Int(p, 0));
  });
}

CheckRecord check_van_hamme(long p) {
  return run("classical-van-hamme", params(p), [&](CheckRecord& rec) {
    require_odd_prime(p);
    if (p % 4 != 3) throw Inapplicable{"needs p = 3 (mod 4)"};
    compare(rec, "sum", central_power_sum(p, 3, 64), ModP2Int(p, 0));
  });
}

CheckRecord check_q_to_1_limit(long k_max) {
  CheckParams pr;
  pr.modulus_power = 0;
  pr.extra["k_max"] = std::to_string(k_max);
  return run("q-to-1-limit", pr, [&](CheckRecord& rec) {
    if (k_max < 1) throw Inapplicable{"needs k_max >= 1"};
    const QPoly one_minus_q = QPoly::from_ints({1, -1});
    Rational prod = 1;
    for (long k = 1; k <= k_max; ++k) {
      const QPoly odd = q_integer(static_cast<int>(2 * k - 1));
      const QPoly even = q_integer(static_cast<int>(2 * k));
      // (1 - q^n) = (1 - q)[n], so the factor (1-q^(2k-1))/(1-q^(2k)) is [2k-1]/[2k].
      const QPoly lhs = (QPoly(1) - QPoly::monomial(1, 2 * k - 1)) * even;
      const QPoly rhs = (QPoly(1) - QPoly::monomial(1, 2 * k)) * odd;
      if (lhs != rhs || one_minus_q * odd != QPoly(1) - QPoly::monomial(1, 2 * k - 1)) {
        rec.status = Status::fail;
        rec.witness = Witness{"q-integer factorization", static_cast<std::size_t>(k), lhs - rhs};
        return;
      }
      prod *= eval_at_one(odd) / eval_at_one(even);
      const Rational b(binomial(2 * k, k));
      const Rational expected = b * b / rpow(Rational(16), k);
      if (prod * prod != expected) {
        rec.status = Status::fail;
        rec.witness = Witness{"limit", static_cast<std::size_t>(k), QPoly(Rational(prod * prod - expected))};
        return;
      }
    }
  });
}

}  // namespace qcong
