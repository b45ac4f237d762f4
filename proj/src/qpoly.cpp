#include "qcong/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qcong {

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational out;
  if (text.empty() || out.set_str(text, 10) != 0 || out.get_den() == 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  out.canonicalize();
  return out;
}

namespace {
const Rational kZero{0};
}  // namespace

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly QPoly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return QPoly(std::move(c));
}

QPoly QPoly::monomial(const Rational& c, std::size_t exponent) {
  if (c == 0) return {};
  std::vector<Rational> v(exponent + 1);
  v[exponent] = c;
  return QPoly(std::move(v));
}

const Rational& QPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rational& QPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  Rational tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out[i + j] += tmp;
    }
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& other) { return *this = *this * other; }

QPoly& QPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QPoly QPoly::spread(unsigned m) const {
  if (m == 0) throw std::domain_error("spread by zero");
  if (is_zero()) return {};
  std::vector<Rational> out(static_cast<std::size_t>(degree()) * m + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * m] = coeffs_[i];
  return QPoly(std::move(out));
}

QPoly QPoly::shifted(std::size_t shift) const {
  if (is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + shift);
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(shift));
  return QPoly(std::move(out));
}

QPoly QPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return QPoly(std::move(out));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / leading());
}

Rational QPoly::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

QPoly add(const QPoly& a, const QPoly& b) { return a + b; }
QPoly mul(const QPoly& a, const QPoly& b) { return a * b; }

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly{}, a};
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = 1 / b.leading();
  const bool monic = b.leading() == 1;
  Rational tmp;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    Rational factor = monic ? rem[i] : Rational(rem[i] * inv_lead);
    quot[i - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) {
      if (b.coeff(j) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), b.coeff(j).get_mpq_t());
      rem[i - db + j] -= tmp;
    }
  }
  rem.resize(db);
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly remainder(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return a;
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const bool monic = b.leading() == 1;
  const Rational inv_lead = 1 / b.leading();
  Rational factor;
  Rational tmp;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    if (monic) {
      factor = rem[i];
    } else {
      factor = rem[i] * inv_lead;
    }
    for (std::size_t j = 0; j < db; ++j) {
      if (b.coeff(j) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), b.coeff(j).get_mpq_t());
      rem[i - db + j] -= tmp;
    }
    rem[i] = 0;
  }
  rem.resize(db);
  return QPoly(std::move(rem));
}

GcdResult ext_gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  // Invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
  QPoly r0 = a, r1 = b;
  QPoly s0 = 1, s1 = 0;
  QPoly t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    auto [quot, rem] = divrem(r0, r1);
    r0 = std::exchange(r1, std::move(rem));
    s0 = std::exchange(s1, s0 - quot * s1);
    t0 = std::exchange(t1, t0 - quot * t1);
  }
  const Rational scale = 1 / r0.leading();
  return {r0 * scale, s0 * scale, t0 * scale};
}

QPoly q_integer(int n) {
  if (n < 1) throw std::domain_error("q_integer requires n >= 1");
  return QPoly(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

Rational eval_at_one(const QPoly& a) {
  Rational acc = 0;
  for (const auto& c : a.coeffs()) acc += c;
  return acc;
}

QPoly gaussian_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return {};
  k = std::min(k, n - k);
  // row[j] holds [i choose j]; walk i upward with [i j] = [i-1 j-1] + q^j [i-1 j].
  std::vector<QPoly> row(static_cast<std::size_t>(k) + 1);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[j] = row[j - 1] + row[j].shifted(static_cast<std::size_t>(j));
    }
  }
  return row[k];
}

}  // namespace qcong
