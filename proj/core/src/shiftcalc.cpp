#include "vsasm/shiftcalc.hpp"

#include <map>
#include <stdexcept>

#include "vsasm/binomial.hpp"
#include "vsasm/permutation.hpp"
#include "vsasm/symmetrize.hpp"

namespace vsasm {

namespace {

std::string leading_term(const Polynomial& p) {
  const auto& t = p.terms().back();
  return to_string(Polynomial::monomial(p.nvars(), t.exp, t.coeff));
}

Polynomial constant_poly(int nvars, const Rational& c) { return Polynomial::constant(nvars, c); }

void require_ordinary_in(const Polynomial& p, int var, const char* who) {
  if (p.min_exponent(var) < 0) throw std::invalid_argument(std::string(who) + ": negative power of the variable");
}

// p = sum_k c_k z_var^k with c_k free of z_var.
std::vector<Polynomial> coefficients_in(const Polynomial& p, int var) {
  require_ordinary_in(p, var, "coefficients_in");
  const int n = p.nvars();
  std::vector<std::vector<Term<Rational>>> parts(static_cast<std::size_t>(p.max_exponent(var) + 1));
  for (const auto& t : p.terms()) {
    ExponentVector e = t.exp;
    e.set(var, 0);
    parts[static_cast<std::size_t>(t.exp[var])].push_back({e, t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& part : parts) out.push_back(Polynomial::from_terms(n, std::move(part)));
  return out;
}

void check_var(const Polynomial& p, int var) {
  if (var < 0 || var >= p.nvars()) throw std::out_of_range("operator variable out of range");
}

}  // namespace

ConstantVector make_constants(int nvars, std::span<const long long> values) {
  ConstantVector c;
  for (long long v : values) c.values.push_back(constant_poly(nvars, Rational(v)));
  return c;
}

Polynomial substitute(const Polynomial& p, int var, const Polynomial& q) {
  check_var(p, var);
  if (q.nvars() != p.nvars()) throw VariableCountMismatch(p.nvars(), q.nvars());
  auto parts = coefficients_in(p, var);
  Polynomial result(p.nvars());
  Polynomial power = Polynomial::one(p.nvars());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) power *= q;
    if (!parts[k].is_zero()) result += parts[k] * power;
  }
  return result;
}

Polynomial shift(const Polynomial& p, int var, int k) {
  check_var(p, var);
  if (k == 0) return p;
  require_ordinary_in(p, var, "shift");
  std::vector<Term<Rational>> out;
  for (const auto& t : p.terms()) {
    const int e = t.exp[var];
    Rational kp(1);
    // (z + k)^e = sum_r binom(e, r) k^(e-r) z^r, emitted for r = e, e-1, ..., 0.
    for (int r = e; r >= 0; --r) {
      ExponentVector x = t.exp;
      x.set(var, r);
      out.push_back({x, t.coeff * binom(e, r) * kp});
      kp *= Rational(k);
    }
  }
  return Polynomial::from_terms(p.nvars(), std::move(out));
}

Polynomial forward_difference(const Polynomial& p, int var, int power) {
  if (power < 0) throw std::invalid_argument("Delta: negative power");
  Polynomial r = p;
  for (int i = 0; i < power && !r.is_zero(); ++i) r = shift(r, var, 1) - r;
  return r;
}

Polynomial backward_difference(const Polynomial& p, int var, int power) {
  if (power < 0) throw std::invalid_argument("delta: negative power");
  Polynomial r = p;
  for (int i = 0; i < power && !r.is_zero(); ++i) r = r - shift(r, var, -1);
  return r;
}

Polynomial antiderivative(const Polynomial& p, int var) {
  check_var(p, var);
  const int n = p.nvars();
  if (p.is_zero()) return p;
  require_ordinary_in(p, var, "antiderivative");
  const int degree = p.max_exponent(var);
  // Newton coefficients c_k = (Delta^k p)(0), so p(x) = sum c_k binom(x, k).
  std::vector<Polynomial> values;
  for (int j = 0; j <= degree; ++j) values.push_back(substitute(p, var, constant_poly(n, Rational(j))));
  std::vector<Polynomial> newton;
  for (int k = 0; k <= degree; ++k) {
    newton.push_back(values.front());
    for (std::size_t j = 0; j + 1 < values.size(); ++j) values[j] = values[j + 1] - values[j];
    values.pop_back();
  }
  // binom(x+1, k+1) satisfies binom(x+1,k+1) - binom(x,k+1) = binom(x,k).
  Polynomial x = Polynomial::variable(n, var);
  Polynomial result(n);
  Polynomial falling = x + constant_poly(n, Rational(1));
  Rational fact(1);
  for (int k = 0; k <= degree; ++k) {
    if (k > 0) {
      falling *= x + constant_poly(n, Rational(1 - k));
      fact *= Rational(k + 1);
    }
    if (!newton[static_cast<std::size_t>(k)].is_zero()) {
      result += newton[static_cast<std::size_t>(k)] * falling * fact.inverse();
    }
  }
  return result;
}

Polynomial ext_sum(const Polynomial& p, int var, const Polynomial& a, const Polynomial& b) {
  Polynomial q = antiderivative(p, var);
  Polynomial below = a - constant_poly(p.nvars(), Rational(1));
  return substitute(q, var, b) - substitute(q, var, below);
}

Polynomial inverse_Delta(const Polynomial& p, int var, const ConstantVector& constants) {
  check_var(p, var);
  Polynomial r = p;
  const Polynomial x_minus_one = Polynomial::variable(p.nvars(), var) - constant_poly(p.nvars(), Rational(1));
  // ^{c_i..c_{-1}}Delta^i = ^{c_i}Delta^{-1} ... ^{c_{-1}}Delta^{-1}; c_{-1} acts first.
  for (auto it = constants.values.rbegin(); it != constants.values.rend(); ++it) {
    Polynomial q = antiderivative(r, var);
    r = substitute(q, var, x_minus_one) - substitute(q, var, *it);
  }
  return r;
}

Polynomial inverse_delta(const Polynomial& p, int var, const ConstantVector& constants) {
  check_var(p, var);
  Polynomial r = p;
  for (auto it = constants.values.rbegin(); it != constants.values.rend(); ++it) {
    Polynomial q = antiderivative(r, var);
    r = q - substitute(q, var, *it - constant_poly(p.nvars(), Rational(1)));
  }
  return r;
}

Polynomial Delta_power(const Polynomial& p, int var, int i, const ConstantVector& constants) {
  if (i >= 0) return forward_difference(p, var, i);
  if (constants.order() != i) throw std::invalid_argument("Delta_power: constant vector length mismatch");
  return inverse_Delta(p, var, constants);
}

Polynomial delta_power(const Polynomial& p, int var, int i, const ConstantVector& constants) {
  if (i >= 0) return backward_difference(p, var, i);
  if (constants.order() != i) throw std::invalid_argument("delta_power: constant vector length mismatch");
  return inverse_delta(p, var, constants);
}

Polynomial apply_shift(const Polynomial& p, const OperatorSpec& op) {
  switch (op.kind) {
    case OpKind::kE:
      return shift(p, op.var, op.power);
    case OpKind::kDelta:
      return forward_difference(p, op.var, op.power);
    case OpKind::kdelta:
      return backward_difference(p, op.var, op.power);
    default:
      throw std::invalid_argument("apply_shift: not a shift operator");
  }
}

Polynomial apply_inverse(const Polynomial& p, const OperatorSpec& op) {
  if (op.kind != OpKind::kInvDelta && op.kind != OpKind::kInvdelta) {
    throw std::invalid_argument("apply_inverse: not an inverse operator");
  }
  if (op.power >= 0 || op.constants.order() != op.power) {
    throw std::invalid_argument("apply_inverse: constant vector length must equal -power");
  }
  return op.kind == OpKind::kInvDelta ? inverse_Delta(p, op.var, op.constants)
                                      : inverse_delta(p, op.var, op.constants);
}

Polynomial swap_vars(const Polynomial& p, int x, int y) {
  check_var(p, x);
  check_var(p, y);
  return p.map_exponents(p.nvars(), [&](const ExponentVector& e) {
    ExponentVector r = e;
    r.set(x, e[y]);
    r.set(y, e[x]);
    return r;
  });
}

Polynomial apply_vw(const Polynomial& p, const OperatorSpec& op) {
  const int x = op.var;
  const int y = op.var2;
  check_var(p, x);
  check_var(p, y);
  if (x == y) throw std::invalid_argument("apply_vw: equal variable indices");
  switch (op.kind) {
    case OpKind::kV: {
      Polynomial ex = shift(p, x, -1);
      return ex + shift(p, y, 1) - shift(ex, y, 1);
    }
    case OpKind::kW:
      return p - shift(p, y, 1) + shift(shift(p, x, 1), y, 1);
    case OpKind::kWinv: {
      Polynomial sum(p.nvars());
      Polynomial term = p;
      for (int i = 0; !term.is_zero(); ++i) {
        Polynomial t = shift(term, y, i);
        if (i % 2 == 0) {
          sum += t;
        } else {
          sum -= t;
        }
        term = forward_difference(term, x);
      }
      return sum;
    }
    case OpKind::kSwap:
      return swap_vars(p, x, y);
    default:
      throw std::invalid_argument("apply_vw: not a V/W/Winv/Swap operator");
  }
}

Polynomial apply(const Polynomial& p, const OperatorSpec& op) {
  switch (op.kind) {
    case OpKind::kE:
    case OpKind::kDelta:
    case OpKind::kdelta:
      return apply_shift(p, op);
    case OpKind::kInvDelta:
    case OpKind::kInvdelta:
      return apply_inverse(p, op);
    default:
      return apply_vw(p, op);
  }
}

bool is_antisymmetric(const Polynomial& b) {
  for (int i = 0; i + 1 < b.nvars(); ++i) {
    if (!(swap_vars(b, i, i + 1) == -b)) return false;
  }
  return true;
}

Polynomial antisym_seed_to_a(const Polynomial& b) {
  if (!is_antisymmetric(b)) throw std::invalid_argument("antisym_seed_to_a: seed is not antisymmetric");
  Polynomial a = b;
  for (int p = 0; p < b.nvars(); ++p) {
    for (int q = p + 1; q < b.nvars(); ++q) a = apply_vw(a, {OpKind::kW, q, p, 1, {}});
  }
  return a;
}

CheckOutcome verify_shift_antisymmetry(const Polynomial& a) {
  for (int i = 0; i + 1 < a.nvars(); ++i) {
    Polynomial v = apply_vw(a, {OpKind::kV, i, i + 1, 1, {}});
    Polynomial moved = shift(shift(swap_vars(v, i, i + 1), i, -1), i + 1, 1);
    Polynomial r = v + moved;
    if (!r.is_zero()) {
      return CheckOutcome::fail("0", to_string(r), "pair k" + std::to_string(i + 1) + ",k" + std::to_string(i + 2) +
                                                       ": " + leading_term(r));
    }
  }
  return CheckOutcome::pass();
}

namespace {

CheckOutcome compare(const std::string& clause, const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs == rhs) return CheckOutcome::pass();
  auto c = CheckOutcome::fail(to_string(rhs), to_string(lhs), leading_term(lhs - rhs));
  c.detail = clause;
  return c;
}

}  // namespace

CheckOutcome check_right_inverse_identities(const Polynomial& p, int x, int y, int z) {
  const int n = p.nvars();
  if (p.max_exponent(z) != 0 || p.min_exponent(z) != 0) {
    throw std::invalid_argument("check_right_inverse_identities: p depends on the constant slot");
  }
  const Polynomial zv = Polynomial::variable(n, z);
  const Polynomial one = constant_poly(n, Rational(1));
  ConstantVector c{{zv}};
  const std::vector<std::pair<std::string, std::pair<Polynomial, Polynomial>>> clauses = {
      {"Delta after inverse", {forward_difference(inverse_Delta(p, x, c), x), p}},
      {"inverse after Delta", {inverse_Delta(forward_difference(p, x), x, c), p - substitute(p, x, zv + one)}},
      {"delta after inverse", {backward_difference(inverse_delta(p, x, c), x), p}},
      {"inverse after delta", {inverse_delta(backward_difference(p, x), x, c), p - substitute(p, x, zv - one)}},
      {"Delta = E delta", {forward_difference(p, x), shift(backward_difference(p, x), x, 1)}},
      {"inverse Delta = E_x^-1 E_z inverse delta", {inverse_Delta(p, x, c), shift(shift(inverse_delta(p, x, c), x, -1), z, 1)}},
      {"Delta_y commutes", {forward_difference(inverse_Delta(p, x, c), y), inverse_Delta(forward_difference(p, y), x, c)}},
      {"delta_y commutes", {backward_difference(inverse_Delta(p, x, c), y), inverse_Delta(backward_difference(p, y), x, c)}},
  };
  for (const auto& [name, sides] : clauses) {
    auto r = compare(name, sides.first, sides.second);
    if (!r.passed) return r;
  }
  return CheckOutcome::pass();
}

CheckOutcome check_delta_conversion(const Polynomial& p, int x, std::span<const int> z_slots) {
  const int n = p.nvars();
  const int i = -static_cast<int>(z_slots.size());
  ConstantVector c;
  for (int slot : z_slots) c.values.push_back(Polynomial::variable(n, slot));
  Polynomial rhs = shift(inverse_delta(p, x, c), x, i);
  // z_j sits at position j - i of z_slots and is shifted by j + 2.
  for (int pos = 0; pos < -i; ++pos) rhs = shift(rhs, z_slots[static_cast<std::size_t>(pos)], i + pos + 2);
  return compare("Delta/delta conversion", inverse_Delta(p, x, c), rhs);
}

Polynomial restrict_to_diagonal(const Polynomial& p) {
  return p.map_exponents(1, [&](const ExponentVector& e) {
    int d = 0;
    for (int i = 0; i < p.nvars(); ++i) d += e[i];
    ExponentVector r;
    r.set(0, d);
    return r;
  });
}

CheckOutcome verify_conjecture_62(int s, int t, const Polynomial& a) {
  if (s < 1 || s > t) throw std::invalid_argument("verify_conjecture_62: needs 1 <= s <= t");
  const int n = s + t - 1;
  if (a.nvars() != n) throw VariableCountMismatch(n, a.nvars());
  if (!verify_shift_antisymmetry(a).passed) {
    throw std::invalid_argument("verify_conjecture_62: polynomial lacks the shift antisymmetry");
  }
  // Slots: y_i -> i-1 (i = 1..s), k_i -> s+i-2 (i = 2..t).
  auto y = [](int i) { return i - 1; };
  auto k = [s](int i) { return s + i - 2; };

  Polynomial lhs = a;
  for (int i = 1; i <= s; ++i) lhs = shift(backward_difference(lhs, y(i), i - 1), y(i), 2 * s + 3 - 2 * i);
  for (int i = 2; i <= t; ++i) lhs = shift(backward_difference(lhs, k(i), s), k(i), 2 * i);

  // a(k_2..k_t, y_1..y_s): argument m < t-1 is k_{m+2}, argument t-1+r is y_{r+1}.
  Polynomial rhs = a.map_exponents(n, [&](const ExponentVector& e) {
    ExponentVector r;
    for (int m = 0; m < t - 1; ++m) r.set(k(m + 2), e[m]);
    for (int q = 0; q < s; ++q) r.set(y(q + 1), e[t - 1 + q]);
    return r;
  });
  const Rational sign_s = (s % 2 == 0) ? Rational(1) : Rational(-1);
  for (int i = 2; i <= t; ++i) rhs = shift(forward_difference(rhs, k(i), s), k(i), 2 * i) * sign_s;
  for (int i = 1; i <= s; ++i) {
    const Rational sign = ((s - i) % 2 == 0) ? Rational(1) : Rational(-1);
    rhs = shift(forward_difference(rhs, y(i), s - i), y(i), 2 * t + 3 - 2 * i) * sign;
  }

  Polynomial dl = restrict_to_diagonal(lhs);
  Polynomial dr = restrict_to_diagonal(rhs);
  if (dl == dr) return CheckOutcome::pass(to_string(dl));
  return CheckOutcome::fail(to_string(dl), to_string(dr), leading_term(dl - dr));
}

Polynomial apply_laurent_operator(const Polynomial& op, const Polynomial& a) {
  if (op.nvars() != a.nvars()) throw VariableCountMismatch(op.nvars(), a.nvars());
  Polynomial sum(a.nvars());
  for (const auto& term : op.terms()) {
    Polynomial moved = a;
    for (int v = 0; v < a.nvars(); ++v) moved = shift(moved, v, term.exp[v]);
    sum += moved * term.coeff;
  }
  return sum;
}

CheckOutcome verify_laurent_to_op(const Polynomial& op, const Polynomial& a) {
  if (!asym(op, 1).is_zero()) throw std::invalid_argument("verify_laurent_to_op: ASym(Op) is not zero");
  if (!is_antisymmetric(a)) throw std::invalid_argument("verify_laurent_to_op: a is not antisymmetric");
  Polynomial d = restrict_to_diagonal(apply_laurent_operator(op, a));
  if (d.is_zero()) return CheckOutcome::pass();
  return CheckOutcome::fail("0", to_string(d), leading_term(d));
}

}  // namespace vsasm
