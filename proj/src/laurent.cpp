#include "qcong/laurent.hpp"

#include <algorithm>

namespace qcong {

namespace {
const LaurentPoly kZeroLaurent{};
}  // namespace

LaurentPoly::LaurentPoly(long shift, QPoly body) : shift_(shift), body_(std::move(body)) { normalize(); }

LaurentPoly LaurentPoly::monomial(const Rational& c, long exponent) { return {exponent, QPoly(c)}; }

void LaurentPoly::normalize() {
  if (body_.is_zero()) {
    shift_ = 0;
    return;
  }
  std::size_t low = 0;
  while (body_.coeff(low) == 0) ++low;
  if (low == 0) return;
  auto c = body_.coeffs();
  body_ = QPoly(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(low), c.end()));
  shift_ += static_cast<long>(low);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const long base = std::min(shift_, other.shift_);
  body_ = body_.shifted(static_cast<std::size_t>(shift_ - base)) +
          other.body_.shifted(static_cast<std::size_t>(other.shift_ - base));
  shift_ = base;
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  body_ *= other.body_;
  shift_ += other.shift_;
  normalize();
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (shift_ == 0) return body_.to_string();
  return "q^" + std::to_string(shift_) + "*(" + body_.to_string() + ")";
}

LaurentPoly laurent_pochhammer(long a, long step, long k) {
  LaurentPoly out = 1;
  for (long j = 0; j < k; ++j) out *= LaurentPoly(1) - LaurentPoly::monomial(1, a + j * step);
  return out;
}

LaurentPoly laurent_qbinom(long n, long k, long m) {
  return LaurentPoly(gaussian_binomial(static_cast<int>(n), static_cast<int>(k)).spread(static_cast<unsigned>(m)));
}

XLaurent::XLaurent(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

const LaurentPoly& XLaurent::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZeroLaurent;
}

void XLaurent::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void XLaurent::add_to(std::size_t k, const LaurentPoly& c) {
  if (coeffs_.size() <= k) coeffs_.resize(k + 1);
  coeffs_[k] += c;
  trim();
}

XLaurent& XLaurent::operator+=(const XLaurent& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

XLaurent& XLaurent::operator-=(const XLaurent& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

XLaurent operator*(const XLaurent& a, const XLaurent& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<LaurentPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return XLaurent(std::move(out));
}

XLaurent operator*(XLaurent a, const LaurentPoly& s) {
  for (auto& c : a.coeffs_) c *= s;
  a.trim();
  return a;
}

XLaurent XLaurent::negate_x() const {
  XLaurent out = *this;
  for (std::size_t k = 1; k < out.coeffs_.size(); k += 2) out.coeffs_[k] = -out.coeffs_[k];
  return out;
}

XLaurent x_laurent_pochhammer(long a, long k) {
  XLaurent out({LaurentPoly(1)});
  for (long j = 0; j < k; ++j) {
    out = out * XLaurent({LaurentPoly(1), -LaurentPoly::monomial(1, a + j)});
  }
  return out;
}

}  // namespace qcong
