#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "vsasm/rational.hpp"

namespace vsasm {

// Dense univariate polynomial in the statistic variable X with exact
// coefficients. Index i of coeffs() is the coefficient of X^i; the
// representation never carries trailing zeros.
class XPoly {
 public:
  static constexpr int kZeroDegree = -1;

  XPoly() = default;
  XPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  XPoly(int c) : XPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  XPoly(std::initializer_list<Rational> coeffs);
  explicit XPoly(std::vector<Rational> coeffs);

  static XPoly x() { return XPoly({Rational(0), Rational(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  // kZeroDegree for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Coefficient of X^i (zero outside the stored range).
  Rational coeff(int i) const;

  Rational eval(const Rational& x) const;

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& rhs);
  XPoly& operator-=(const XPoly& rhs);
  XPoly& operator*=(const XPoly& rhs);
  XPoly& operator*=(const Rational& rhs);
  // Exact division by a nonzero scalar.
  XPoly& operator/=(const Rational& rhs);

  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(XPoly a, const XPoly& b) { return a *= b; }
  friend XPoly operator*(XPoly a, const Rational& b) { return a *= b; }
  friend XPoly operator*(const Rational& b, XPoly a) { return a *= b; }
  friend bool operator==(const XPoly&, const XPoly&) = default;

  // "X^2+3*X-1/2" style; "0" for the zero polynomial.
  std::string to_string() const;

  std::size_t hash() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace vsasm
