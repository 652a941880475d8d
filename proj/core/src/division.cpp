#include "vsasm/division.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace vsasm {

namespace {

Rational divide_coeff(const Rational& a, const Rational& b) { return a / b; }

XPoly divide_coeff(const XPoly& a, const XPoly& b) {
  if (b.degree() != 0) throw std::domain_error("exact_div: leading coefficient is not a unit");
  XPoly r = a;
  r /= b.coeff(0);
  return r;
}

template <class C>
std::string coeff_text(const C& c) {
  return c.to_string();
}

template <class C>
std::string term_text(const ExponentVector& e, const C& c, int nvars) {
  return coeff_text(c) + "*z^" + e.to_string(nvars);
}

template <class C>
LaurentPolynomial<C> divide_by_monomial(const LaurentPolynomial<C>& p, const ExponentVector& e, const C& c) {
  std::vector<Term<C>> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.exp - e, divide_coeff(t.coeff, c)});
  return LaurentPolynomial<C>::from_sorted_terms(p.nvars(), std::move(out));
}

}  // namespace

Polynomial vandermonde(int n) {
  if (n < 0) throw std::invalid_argument("vandermonde: negative size");
  Polynomial v = Polynomial::one(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) v *= Polynomial::variable(n, j) - Polynomial::variable(n, i);
  }
  return v;
}

template <class C>
LaurentPolynomial<C> divide_by_difference(const LaurentPolynomial<C>& p, int i, int j) {
  p.check_slot(i);
  p.check_slot(j);
  if (i == j) throw std::invalid_argument("divide_by_difference: equal slots");
  const auto& terms = p.terms();
  if (terms.empty()) return p;

  // Group by (exponents outside {i, j}, e_i + e_j); inside a group the
  // quotient coefficients are prefix sums over increasing e_i.
  struct Key {
    ExponentVector::Packed packed;
    ExponentVector rest;
    int total;
    int a;
    std::size_t idx;
  };
  bool packable = true;
  std::vector<Key> keys;
  keys.reserve(terms.size());
  for (std::size_t k = 0; k < terms.size(); ++k) {
    ExponentVector rest = terms[k].exp;
    int a = rest[i];
    int total = a + rest[j];
    rest.set(i, 0);
    rest.set(j, 0);
    packable = packable && rest.packable() && a >= -512 && a < 512 && total >= -1024 && total < 1024;
    ExponentVector::Packed key = 0;
    for (int v = 0; packable && v < p.nvars(); ++v) {
      if (v != i && v != j) key = (key << 10) | static_cast<ExponentVector::Packed>(rest[v] + 512);
    }
    key = (key << 11) | static_cast<ExponentVector::Packed>(total + 1024);
    key = (key << 10) | static_cast<ExponentVector::Packed>(a + 512);
    keys.push_back({key, rest, total, a, k});
  }
  if (packable) {
    std::sort(keys.begin(), keys.end(), [](const Key& x, const Key& y) { return x.packed < y.packed; });
  } else {
    std::sort(keys.begin(), keys.end(), [](const Key& x, const Key& y) {
      if (x.rest != y.rest) return x.rest < y.rest;
      if (x.total != y.total) return x.total < y.total;
      return x.a < y.a;
    });
  }

  std::vector<Term<C>> out;
  out.reserve(terms.size());
  std::size_t g = 0;
  while (g < keys.size()) {
    std::size_t h = g;
    while (h < keys.size() && keys[h].rest == keys[g].rest && keys[h].total == keys[g].total) ++h;
    C prefix{};
    for (std::size_t k = g; k < h; ++k) {
      prefix += terms[keys[k].idx].coeff;
      int a_end = (k + 1 < h) ? keys[k + 1].a : keys[k].a;
      if (k + 1 == h) break;
      for (int a = keys[k].a; a < a_end; ++a) {
        if (prefix.is_zero()) break;
        ExponentVector e = keys[g].rest;
        e.set(i, a);
        e.set(j, keys[g].total - 1 - a);
        out.push_back({e, prefix});
      }
    }
    if (!prefix.is_zero()) {
      const auto& t = terms[keys[g].idx];
      throw NotDivisibleError("not divisible by z" + std::to_string(j + 1) + "-z" + std::to_string(i + 1),
                              term_text(t.exp, t.coeff, p.nvars()));
    }
    g = h;
  }
  return LaurentPolynomial<C>::from_terms(p.nvars(), std::move(out));
}

template <class C>
LaurentPolynomial<C> divide_by_vandermonde(const LaurentPolynomial<C>& p) {
  LaurentPolynomial<C> q = p;
  for (int i = 0; i < p.nvars(); ++i) {
    for (int j = i + 1; j < p.nvars(); ++j) q = divide_by_difference(q, i, j);
  }
  return q;
}

template <class C>
LaurentPolynomial<C> exact_div(const LaurentPolynomial<C>& num, const LaurentPolynomial<C>& den) {
  if (num.nvars() != den.nvars()) throw VariableCountMismatch(num.nvars(), den.nvars());
  if (den.is_zero()) throw std::domain_error("exact_div: division by zero");
  if (num.is_zero()) return num;
  const auto& dt = den.terms();
  if (dt.size() == 1) return divide_by_monomial(num, dt[0].exp, dt[0].coeff);

  if (dt.size() == 2) {
    ExponentVector diff = dt[1].exp - dt[0].exp;
    int plus = -1;
    int minus = -1;
    bool shape = true;
    for (int v = 0; v < num.nvars(); ++v) {
      if (diff[v] == 1 && plus < 0) {
        plus = v;
      } else if (diff[v] == -1 && minus < 0) {
        minus = v;
      } else if (diff[v] != 0) {
        shape = false;
      }
    }
    if (shape && plus >= 0 && minus >= 0 && (dt[0].coeff + dt[1].coeff).is_zero()) {
      // den = c1 * z^(e0 - u_minus) * (z_plus - z_minus)
      ExponentVector m = dt[0].exp;
      m.add(minus, -1);
      return divide_by_monomial(divide_by_difference(num, minus, plus), m, dt[1].coeff);
    }
  }

  const int n = num.nvars();
  std::vector<int> lo(static_cast<std::size_t>(n));
  std::vector<int> hi(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    lo[static_cast<std::size_t>(v)] = num.min_exponent(v) - den.min_exponent(v);
    hi[static_cast<std::size_t>(v)] = num.max_exponent(v) - den.max_exponent(v);
  }
  std::map<ExponentVector, C> rem;
  for (const auto& t : num.terms()) rem.emplace(t.exp, t.coeff);
  const auto& lead = dt.back();
  std::vector<Term<C>> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    ExponentVector qe = top->first - lead.exp;
    for (int v = 0; v < n; ++v) {
      if (qe[v] < lo[static_cast<std::size_t>(v)] || qe[v] > hi[static_cast<std::size_t>(v)]) {
        throw NotDivisibleError("exact_div: nonzero remainder", term_text(top->first, top->second, n));
      }
    }
    C qc = divide_coeff(top->second, lead.coeff);
    for (const auto& t : dt) {
      C prod = qc;
      prod *= t.coeff;
      auto [it, inserted] = rem.try_emplace(t.exp + qe, C{});
      it->second -= prod;
      if (it->second.is_zero()) rem.erase(it);
    }
    quotient.push_back({qe, std::move(qc)});
  }
  return LaurentPolynomial<C>::from_terms(n, std::move(quotient));
}

template LaurentPolynomial<Rational> divide_by_difference(const LaurentPolynomial<Rational>&, int, int);
template LaurentPolynomial<XPoly> divide_by_difference(const LaurentPolynomial<XPoly>&, int, int);
template LaurentPolynomial<Rational> divide_by_vandermonde(const LaurentPolynomial<Rational>&);
template LaurentPolynomial<XPoly> divide_by_vandermonde(const LaurentPolynomial<XPoly>&);
template LaurentPolynomial<Rational> exact_div(const LaurentPolynomial<Rational>&, const LaurentPolynomial<Rational>&);
template LaurentPolynomial<XPoly> exact_div(const LaurentPolynomial<XPoly>&, const LaurentPolynomial<XPoly>&);

}  // namespace vsasm
