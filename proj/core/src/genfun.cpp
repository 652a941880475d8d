#include "vsasm/genfun.hpp"

#include <stdexcept>
#include <string>

#include "vsasm/alpha.hpp"
#include "vsasm/binomial.hpp"
#include "vsasm/division.hpp"
#include "vsasm/mt.hpp"
#include "vsasm/symmetrize.hpp"

namespace vsasm {

namespace {

XLaurent xvar(int n, int i, int p = 1) { return XLaurent::variable(n, i, p); }

// 1 + z_i z_j + (X-2) z_i
XLaurent pattern_factor(int n, int i, int j) {
  static const XPoly x_minus_two = XPoly::x() - XPoly(2);
  XLaurent zi = xvar(n, i);
  return XLaurent::one(n) + zi * xvar(n, j) + XLaurent::monomial(n, zi.terms().front().exp, x_minus_two);
}

XLaurent embed_without(const XLaurent& f, int n, int j) {
  std::vector<VarTarget> targets;
  for (int k = 0; k < f.nvars(); ++k) targets.push_back(VarTarget::to_slot(k < j ? k : k + 1));
  return remap(f, n, std::span<const VarTarget>(targets));
}

std::vector<long long> family_exponents(GenfunKind kind, int n) {
  std::vector<long long> k;
  for (int i = 0; i < n; ++i) k.push_back(kind == GenfunKind::kASM ? i : 2 * i);
  return k;
}

std::string render_term(const Polynomial& d) {
  const auto& t = d.terms().front();
  return to_string(Polynomial::monomial(d.nvars(), t.exp, t.coeff));
}

Polynomial var(int n, int i, int p = 1) { return Polynomial::variable(n, i, p); }

}  // namespace

PatternGenFun build_Q(int n, std::span<const long long> k) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("build_Q: unsupported n");
  if (static_cast<int>(k.size()) != n) throw std::invalid_argument("build_Q: k must have n entries");
  ExponentVector mono;
  for (int i = 0; i < n; ++i) mono.set(i, static_cast<int>(k[static_cast<std::size_t>(i)]));
  XLaurent num = XLaurent::monomial(n, mono, XPoly(1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) num *= pattern_factor(n, i, j);
  }
  return {n, std::vector<long long>(k.begin(), k.end()), sym_over_vandermonde(OverVandermonde<XPoly>{num})};
}

std::map<int, XPoly> last_variable_coefficients(const XLaurent& q) {
  const int n = q.nvars();
  std::vector<VarTarget> targets;
  for (int i = 0; i + 1 < n; ++i) targets.push_back(VarTarget::to_value(Rational(1)));
  targets.push_back(VarTarget::to_slot(0));
  std::map<int, XPoly> out;
  const XLaurent line = remap(q, 1, std::span<const VarTarget>(targets));
  for (const auto& t : line.terms()) out[t.exp[0]] = t.coeff;
  return out;
}

CheckOutcome check_prop_91(int n, std::span<const long long> k, int m) {
  if (m < 0) throw std::invalid_argument("check_prop_91: m must be non-negative");
  auto q = build_Q(n, k);
  XPoly lhs;
  for (const auto& [s, c] : last_variable_coefficients(q.Q)) lhs += c * binom(s, m);
  XPoly rhs = alpha_m_eval(n, m, k);
  if (lhs == rhs) return CheckOutcome::pass(lhs.to_string());
  return CheckOutcome::fail(rhs.to_string(), lhs.to_string());
}

CheckOutcome check_cor_92(std::span<const int> bottom, int top) {
  XPoly oracle = pattern_genfun(bottom, top);
  std::vector<long long> k(bottom.begin(), bottom.end());
  auto q = build_Q(static_cast<int>(k.size()), k);
  auto coeffs = last_variable_coefficients(q.Q);
  XPoly got = coeffs.count(top) ? coeffs.at(top) : XPoly();
  if (got == oracle) return CheckOutcome::pass(got.to_string());
  return CheckOutcome::fail(oracle.to_string(), got.to_string(), "top " + std::to_string(top));
}

RecursiveGenfun build_recursive_genfun(GenfunKind kind, int n) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("build_recursive_genfun: unsupported n");
  XLaurent g = XLaurent::one(1);
  for (int m = 2; m <= n; ++m) {
    const int e = kind == GenfunKind::kASM ? m - 1 : 2 * m - 2;
    const XLaurent v_rest = to_xlaurent(vandermonde(m - 1));
    XLaurent num(m);
    for (int j = 0; j < m; ++j) {
      XLaurent term = xvar(m, j, e);
      for (int i = 0; i < m; ++i) {
        if (i != j) term *= pattern_factor(m, i, j);
      }
      term *= embed_without(v_rest, m, j) * embed_without(g, m, j);
      if ((m - 1 - j) % 2 == 0) {
        num += term;
      } else {
        num -= term;
      }
    }
    g = divide_by_vandermonde(num);
  }
  RecursiveGenfun r;
  r.value = g;
  auto k = family_exponents(kind, n);
  XLaurent direct = build_Q(n, k).Q;
  if (direct != g) {
    XLaurent d = direct - g;
    r.agreement = CheckOutcome::fail("recursion equals direct Sym", "differs",
                                     to_string(XLaurent::monomial(n, d.terms().front().exp, d.terms().front().coeff)));
  }
  return r;
}

Rational all_ones(const XLaurent& q, const Rational& x) {
  Rational total;
  for (const auto& t : q.terms()) total += t.coeff.eval(x);
  return total;
}

Polynomial t_family_sym(const TFamilyParams& p, int n) {
  if (n < 2 || n > kMaxVars) throw std::invalid_argument("t_family_sym: needs 2 <= n");
  const bool normalized = p.b.is_zero() && p.d.is_zero();
  const Polynomial one = Polynomial::one(n);
  Polynomial num = one;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // T(x,y) (y - x) with x = z_i, y = z_j; 1 - x/y = (y - x)/y.
      const Polynomial x = var(n, i);
      const Polynomial y = var(n, j);
      const Polynomial xi = var(n, i, -1);
      const Polynomial yi = var(n, j, -1);
      Polynomial left = p.a * (xi + y) + p.c * one;
      if (normalized) {
        num *= y * left;
      } else {
        Polynomial right = p.b * (x + yi) + p.c * one;
        num *= y * left * right + (p.a * p.b * xi * y + p.d * one) * (y - x);
      }
    }
  }
  return sym_over_vandermonde(OverVandermonde<Rational>{num});
}

TFamilyReport t_family_report(const TFamilyParams& p, int n) {
  TFamilyReport r;
  r.sym = t_family_sym(p, n);
  r.inversion = check_inversion_invariance(r.sym, InversionMode::kEachVariable);
  if (p.a.is_zero() && !r.sym.is_constant()) {
    r.a_zero = CheckOutcome::fail("constant", "depends on z", render_term(r.sym));
  }
  if (p.a == Rational(1) && p.b.is_zero() && p.c.is_zero() && p.d.is_zero()) {
    const Polynomial one = Polynomial::one(n);
    Polynomial closed = one;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) closed *= (one + var(n, i) * var(n, j)) * (var(n, i) + var(n, j));
    }
    ExponentVector mono;
    for (int i = 0; i < n; ++i) mono.set(i, 1 - n);
    closed = closed.shifted(mono);
    if (closed != r.sym) r.closed_form = CheckOutcome::fail("closed form", "differs", render_term(closed - r.sym));
  }
  return r;
}

CheckOutcome t_family_check(const TFamilyParams& p, int n) {
  auto r = t_family_report(p, n);
  for (const auto* c : {&r.a_zero, &r.closed_form, &r.inversion}) {
    if (!c->passed) return *c;
  }
  return CheckOutcome::pass(std::to_string(r.sym.size()) + " terms");
}

CheckOutcome check_top_symmetry(int n) {
  auto k = family_exponents(GenfunKind::kVSASM, n);
  auto coeffs = last_variable_coefficients(build_Q(n, k).Q);
  for (const auto& [t, c] : coeffs) {
    const int mirror = 2 * n - 2 - t;
    Rational other = coeffs.count(mirror) ? coeffs.at(mirror).eval(Rational(1)) : Rational(0);
    if (c.eval(Rational(1)) != other) {
      return CheckOutcome::fail(other.to_string(), c.eval(Rational(1)).to_string(), "z^" + std::to_string(t));
    }
  }
  return CheckOutcome::pass();
}

CheckOutcome check_s0_relation(int n) {
  Polynomial lhs = t_family_sym({Rational(1), Rational(0), Rational(-1), Rational(0)}, n);
  auto k = family_exponents(GenfunKind::kVSASM, n);
  ExponentVector mono;
  for (int i = 0; i < n; ++i) mono.set(i, 1 - n);
  Polynomial rhs = eval_x(build_Q(n, k).Q, Rational(1)).shifted(mono);
  if (lhs == rhs) return CheckOutcome::pass();
  return CheckOutcome::fail("prod z^(1-n) Q", "differs", render_term(lhs - rhs));
}

std::vector<std::tuple<int, int, Rational>> q_table(int n, std::span<const long long> k) {
  std::vector<std::tuple<int, int, Rational>> out;
  for (const auto& [t, c] : last_variable_coefficients(build_Q(n, k).Q)) {
    for (int e = 0; e <= c.degree(); ++e) {
      if (!c.coeff(e).is_zero()) out.emplace_back(t, e, c.coeff(e));
    }
  }
  return out;
}

}  // namespace vsasm
