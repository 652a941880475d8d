#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vsasm/exponent.hpp"
#include "vsasm/rational.hpp"
#include "vsasm/xpoly.hpp"

namespace vsasm {

class VariableCountMismatch : public std::invalid_argument {
 public:
  VariableCountMismatch(int a, int b)
      : std::invalid_argument("variable-count mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

template <class C>
struct Term {
  ExponentVector exp;
  C coeff;
};

// Sparse multivariate Laurent polynomial with coefficients in C (Rational or
// XPoly). Terms are stored sorted by exponent vector in ascending
// lexicographic order; zero coefficients are never stored. Variable slots are
// addressed 0-based; rendering uses 1-based names (z1, z2, ...).
template <class C>
class LaurentPolynomial {
 public:
  using Coeff = C;
  using TermType = Term<C>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(int nvars) : nvars_(check_nvars(nvars)) {}

  static LaurentPolynomial constant(int nvars, const C& c) {
    LaurentPolynomial p(nvars);
    if (!c.is_zero()) p.terms_.push_back({ExponentVector{}, c});
    return p;
  }
  static LaurentPolynomial one(int nvars) { return constant(nvars, C(Rational(1))); }

  // z_{index}^{power}; index is 0-based.
  static LaurentPolynomial variable(int nvars, int index, int power = 1) {
    LaurentPolynomial p(nvars);
    p.check_slot(index);
    ExponentVector e;
    e.set(index, power);
    p.terms_.push_back({e, C(Rational(1))});
    return p;
  }

  static LaurentPolynomial monomial(int nvars, const ExponentVector& e, const C& c) {
    LaurentPolynomial p(nvars);
    for (int i = nvars; i < kMaxVars; ++i) {
      if (e[i] != 0) throw std::invalid_argument("monomial: exponent in unused slot");
    }
    if (!c.is_zero()) p.terms_.push_back({e, c});
    return p;
  }

  // Builds a canonical polynomial from arbitrary (possibly repeated, possibly
  // zero) terms.
  static LaurentPolynomial from_terms(int nvars, std::vector<TermType> terms) {
    LaurentPolynomial p(nvars);
    for (const auto& t : terms) {
      for (int i = nvars; i < kMaxVars; ++i) {
        if (t.exp[i] != 0) throw std::invalid_argument("from_terms: exponent in unused slot");
      }
    }
    p.terms_ = canonicalize(std::move(terms));
    return p;
  }

  // Like from_terms, but the caller guarantees terms are sorted, distinct and
  // nonzero.
  static LaurentPolynomial from_sorted_terms(int nvars, std::vector<TermType> terms) {
    LaurentPolynomial p(nvars);
    p.terms_ = std::move(terms);
    return p;
  }

  int nvars() const { return nvars_; }
  const std::vector<TermType>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  C coeff(const ExponentVector& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const TermType& t, const ExponentVector& key) { return t.exp < key; });
    if (it != terms_.end() && it->exp == e) return it->coeff;
    return C{};
  }

  // Constant term (coefficient of the zero exponent vector).
  C constant_term() const { return coeff(ExponentVector{}); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero()); }

  // True if no exponent is negative.
  bool is_ordinary() const {
    for (const auto& t : terms_) {
      for (int i = 0; i < nvars_; ++i) {
        if (t.exp[i] < 0) return false;
      }
    }
    return true;
  }

  // Smallest / largest exponent of variable `slot` over all terms (0 for the
  // zero polynomial).
  int min_exponent(int slot) const {
    check_slot(slot);
    if (terms_.empty()) return 0;
    int m = terms_.front().exp[slot];
    for (const auto& t : terms_) m = std::min(m, t.exp[slot]);
    return m;
  }
  int max_exponent(int slot) const {
    check_slot(slot);
    if (terms_.empty()) return 0;
    int m = terms_.front().exp[slot];
    for (const auto& t : terms_) m = std::max(m, t.exp[slot]);
    return m;
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs) {
    check_same(rhs);
    terms_ = merge(terms_, rhs.terms_, false);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs) {
    check_same(rhs);
    terms_ = merge(terms_, rhs.terms_, true);
    return *this;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs) {
    *this = multiply(*this, rhs);
    return *this;
  }
  LaurentPolynomial& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.coeff *= s;
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) { return multiply(a, b); }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s) { return a *= s; }
  friend LaurentPolynomial operator*(const Rational& s, LaurentPolynomial a) { return a *= s; }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].exp != b.terms_[i].exp || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    }
    return true;
  }

  // Multiplies every term by the monomial z^shift.
  LaurentPolynomial shifted(const ExponentVector& shift) const {
    LaurentPolynomial r = *this;
    for (auto& t : r.terms_) t.exp += shift;
    return r;
  }

  LaurentPolynomial pow(int k) const {
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    LaurentPolynomial result = one(nvars_);
    LaurentPolynomial base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return result;
  }

  // Sum of the terms satisfying pred(term).
  template <class Pred>
  LaurentPolynomial filter(Pred pred) const {
    LaurentPolynomial r(nvars_);
    for (const auto& t : terms_) {
      if (pred(t)) r.terms_.push_back(t);
    }
    return r;
  }

  // Applies an exponent map to every term and re-canonicalizes. The map must
  // produce exponents in slots < new_nvars only.
  template <class F>
  LaurentPolynomial map_exponents(int new_nvars, F&& f) const {
    std::vector<TermType> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({f(t.exp), t.coeff});
    return from_terms(new_nvars, std::move(out));
  }

  // Same polynomial viewed in more variable slots.
  LaurentPolynomial with_nvars(int new_nvars) const {
    if (new_nvars >= nvars_) {
      LaurentPolynomial r = *this;
      r.nvars_ = check_nvars(new_nvars);
      return r;
    }
    for (const auto& t : terms_) {
      for (int i = new_nvars; i < nvars_; ++i) {
        if (t.exp[i] != 0) throw std::invalid_argument("with_nvars: polynomial uses a dropped slot");
      }
    }
    LaurentPolynomial r = *this;
    r.nvars_ = new_nvars;
    return r;
  }

  // Sorts terms by exponent (ascending lex); uses packed keys when possible.
  static void sort_terms(std::vector<TermType>& terms) {
    bool packable = terms.size() > 64;
    for (std::size_t k = 0; packable && k < terms.size(); ++k) packable = terms[k].exp.packable();
    if (!packable) {
      std::sort(terms.begin(), terms.end(), [](const TermType& a, const TermType& b) { return a.exp < b.exp; });
      return;
    }
    std::vector<std::pair<ExponentVector::Packed, std::uint32_t>> keys(terms.size());
    for (std::size_t k = 0; k < terms.size(); ++k) keys[k] = {terms[k].exp.packed(), static_cast<std::uint32_t>(k)};
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<TermType> sorted;
    sorted.reserve(terms.size());
    for (const auto& key : keys) sorted.push_back(std::move(terms[key.second]));
    terms = std::move(sorted);
  }

  static std::vector<TermType> canonicalize(std::vector<TermType> terms) {
    sort_terms(terms);
    std::vector<TermType> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().exp == t.exp) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    return out;
  }

  static LaurentPolynomial multiply(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    a.check_same(b);
    LaurentPolynomial r(a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    const std::size_t products = a.terms_.size() * b.terms_.size();
    if (products <= (1u << 16)) {
      std::vector<TermType> out;
      out.reserve(products);
      for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
          C c = x.coeff;
          c *= y.coeff;
          out.push_back({x.exp + y.exp, std::move(c)});
        }
      }
      r.terms_ = canonicalize(std::move(out));
      return r;
    }
    std::unordered_map<ExponentVector, C, ExponentHash> acc;
    acc.reserve(std::min<std::size_t>(products, a.terms_.size() + b.terms_.size() + (1u << 20)));
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        C c = x.coeff;
        c *= y.coeff;
        auto [it, inserted] = acc.try_emplace(x.exp + y.exp, std::move(c));
        if (!inserted) it->second += c;
      }
    }
    std::vector<TermType> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc) {
      if (!c.is_zero()) out.push_back({e, std::move(c)});
    }
    sort_terms(out);
    r.terms_ = std::move(out);
    return r;
  }

  void check_slot(int slot) const {
    if (slot < 0 || slot >= nvars_) {
      throw std::out_of_range("variable index " + std::to_string(slot) + " out of range for " +
                              std::to_string(nvars_) + " variables");
    }
  }

 private:
  static int check_nvars(int n) {
    if (n < 0 || n > kMaxVars) throw std::invalid_argument("unsupported variable count " + std::to_string(n));
    return n;
  }

  void check_same(const LaurentPolynomial& rhs) const {
    if (nvars_ != rhs.nvars_) throw VariableCountMismatch(nvars_, rhs.nvars_);
  }

  static std::vector<TermType> merge(const std::vector<TermType>& a, const std::vector<TermType>& b, bool negate_b) {
    std::vector<TermType> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].exp < a[i].exp) {
        out.push_back({b[j].exp, negate_b ? -b[j].coeff : b[j].coeff});
        ++j;
      } else {
        C c = a[i].coeff;
        if (negate_b) {
          c -= b[j].coeff;
        } else {
          c += b[j].coeff;
        }
        if (!c.is_zero()) out.push_back({a[i].exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  int nvars_ = 0;
  std::vector<TermType> terms_;
};

using Polynomial = LaurentPolynomial<Rational>;
using XLaurent = LaurentPolynomial<XPoly>;
// Polynomials whose exponents are all non-negative; used for the difference
// calculus. Same representation, checked at the operator boundary.
using OrdinaryPolynomial = Polynomial;

// Target of a variable under remap(): another slot of the result, or a
// constant value.
struct VarTarget {
  int slot = -1;
  Rational value;

  static VarTarget to_slot(int s) { return {s, Rational(0)}; }
  static VarTarget to_value(const Rational& v) { return {-1, v}; }
};

// ---- free functions -------------------------------------------------------

// Replaces z_i by z_i^{-1} for every i in `which` (0-based).
template <class C>
LaurentPolynomial<C> invert_vars(const LaurentPolynomial<C>& a, std::span<const int> which) {
  for (int w : which) a.check_slot(w);
  return a.map_exponents(a.nvars(), [&](ExponentVector e) {
    for (int w : which) e.set(w, -e[w]);
    return e;
  });
}

template <class C>
LaurentPolynomial<C> invert_all_vars(const LaurentPolynomial<C>& a) {
  std::vector<int> all(static_cast<std::size_t>(a.nvars()));
  for (int i = 0; i < a.nvars(); ++i) all[static_cast<std::size_t>(i)] = i;
  return invert_vars(a, std::span<const int>(all));
}

// Substitutes z_i -> target[i] (a slot of the result or a constant).
// Constants must be nonzero wherever a negative exponent meets them.
template <class C>
LaurentPolynomial<C> remap(const LaurentPolynomial<C>& a, int new_nvars, std::span<const VarTarget> targets) {
  if (static_cast<int>(targets.size()) != a.nvars()) throw VariableCountMismatch(static_cast<int>(targets.size()), a.nvars());
  std::vector<std::unordered_map<int, Rational>> power_cache(targets.size());
  auto power = [&](std::size_t i, int e) -> const Rational& {
    auto it = power_cache[i].find(e);
    if (it != power_cache[i].end()) return it->second;
    if (e < 0 && targets[i].value.is_zero()) throw std::domain_error("zero substituted into a negative power");
    return power_cache[i].emplace(e, targets[i].value.pow(e)).first->second;
  };
  std::vector<Term<C>> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    ExponentVector e;
    C c = t.coeff;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      int x = t.exp[static_cast<int>(i)];
      if (x == 0) continue;
      if (targets[i].slot >= 0) {
        if (targets[i].slot >= new_nvars) throw std::out_of_range("remap: target slot out of range");
        e.add(targets[i].slot, x);
      } else {
        c *= power(i, x);
      }
    }
    if (!c.is_zero()) out.push_back({e, std::move(c)});
  }
  return LaurentPolynomial<C>::from_terms(new_nvars, std::move(out));
}

// Exact evaluation at a point. Zero substituted into a negative power throws
// std::domain_error.
template <class C>
C eval(const LaurentPolynomial<C>& a, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != a.nvars()) throw VariableCountMismatch(static_cast<int>(point.size()), a.nvars());
  std::vector<VarTarget> targets;
  for (const auto& v : point) targets.push_back(VarTarget::to_value(v));
  auto r = remap(a, 0, std::span<const VarTarget>(targets));
  return r.constant_term();
}

template <class C>
C eval(const LaurentPolynomial<C>& a, std::initializer_list<Rational> point) {
  std::vector<Rational> p(point);
  return eval(a, std::span<const Rational>(p));
}

// Lifts a rational polynomial into X-polynomial coefficients.
inline XLaurent to_xlaurent(const Polynomial& p) {
  std::vector<Term<XPoly>> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.exp, XPoly(t.coeff)});
  return XLaurent::from_sorted_terms(p.nvars(), std::move(out));
}

// Specializes X to a value.
inline Polynomial eval_x(const XLaurent& p, const Rational& x) {
  std::vector<Term<Rational>> out;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff.eval(x);
    if (!v.is_zero()) out.push_back({t.exp, v});
  }
  return Polynomial::from_sorted_terms(p.nvars(), std::move(out));
}

// Multiplies a polynomial with X-coefficients by a rational polynomial.
inline XLaurent operator*(const XLaurent& a, const Polynomial& b) { return a * to_xlaurent(b); }

// Canonical text rendering: terms in ascending lexicographic exponent order,
// explicit signs, "z1^-2" style exponents. `names` overrides the default
// variable names z1, z2, ...
std::string to_string(const Polynomial& p, std::span<const std::string> names = {});
std::string to_string(const XLaurent& p, std::span<const std::string> names = {});

// Parses the canonical rendering back (Rational coefficients only).
Polynomial parse_polynomial(std::string_view text, int nvars);

}  // namespace vsasm
