#include "vsasm/xpoly.hpp"

#include <stdexcept>

namespace vsasm {

XPoly::XPoly(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

XPoly::XPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

XPoly::XPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational XPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational XPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

XPoly& XPoly::operator+=(const XPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

XPoly& XPoly::operator*=(const XPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

XPoly& XPoly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

XPoly& XPoly::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("XPoly: division by zero");
  for (auto& c : coeffs_) c /= rhs;
  return *this;
}

std::string XPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string mag = c.abs().to_string();
    out += c.sign() < 0 ? "-" : (out.empty() ? "" : "+");
    if (i == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") out += mag + "*";
    out += "X";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::size_t XPoly::hash() const {
  std::size_t h = coeffs_.size();
  for (const auto& c : coeffs_) h = h * 1000003u ^ c.hash();
  return h;
}

}  // namespace vsasm
