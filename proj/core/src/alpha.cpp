#include "vsasm/alpha.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "vsasm/binomial.hpp"
#include "vsasm/linalg.hpp"
#include "vsasm/mt.hpp"
#include "vsasm/shiftcalc.hpp"

namespace vsasm {

namespace {

int k_slot(int j) { return j - 1; }
int l_slot(int n, int j) { return n + j - 1; }

Polynomial constant_poly(int nvars, const Rational& c) { return Polynomial::constant(nvars, c); }

// Sum over (l_1..l_{j-1}) with bounds (k_1..k_j) of a.
Polynomial sum_op(int n, int j, const Polynomial& a) {
  if (j == 1) return a;
  const int nv = a.nvars();
  const int lvar = l_slot(n, j - 1);
  Polynomial kj = Polynomial::variable(nv, k_slot(j));
  Polynomial kprev = Polynomial::variable(nv, k_slot(j - 1));
  Polynomial result = sum_op(n, j - 1, ext_sum(a, lvar, kprev + constant_poly(nv, Rational(1)), kj));
  // l_{j-1} stays a parameter while the inner bound k_{j-1} is lowered by one.
  Polynomial second = shift(sum_op(n, j - 1, a), k_slot(j - 1), -1);
  result += substitute(second, lvar, kprev);
  return result;
}

Rational ext_sum_value(long long a, long long b, const std::function<Rational(long long)>& f) {
  Rational s(0);
  if (b >= a) {
    for (long long x = a; x <= b; ++x) s += f(x);
  } else {
    for (long long x = b + 1; x <= a - 1; ++x) s -= f(x);
  }
  return s;
}

struct NumericAlpha {
  std::map<std::vector<long long>, Rational> memo;

  Rational eval(int n, const std::vector<long long>& k) {
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    Rational v;
    if (n <= kMaxSymbolicAlpha) {
      v = eval_polynomial(alpha_polynomial(n), k);
    } else {
      std::vector<long long> suffix;
      v = g(n, k, static_cast<int>(k.size()), suffix);
    }
    memo.emplace(k, v);
    return v;
  }

  static Rational eval_polynomial(const Polynomial& p, const std::vector<long long>& k) {
    const int n = p.nvars();
    std::vector<std::vector<Rational>> powers(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
      auto& pw = powers[static_cast<std::size_t>(s)];
      pw.emplace_back(1);
      for (int e = 1; e <= p.max_exponent(s); ++e) pw.push_back(pw.back() * Rational(k[static_cast<std::size_t>(s)]));
    }
    Rational total(0);
    for (const auto& t : p.terms()) {
      Rational term = t.coeff;
      for (int s = 0; s < n; ++s) {
        if (t.exp[s] != 0) term *= powers[static_cast<std::size_t>(s)][static_cast<std::size_t>(t.exp[s])];
      }
      total += term;
    }
    return total;
  }

  // Sum over (l_1..l_{j-1}) with bounds (k_1..k_j) of alpha(n-1; l_1..l_{j-1}, suffix).
  Rational g(int n, std::vector<long long> k, int j, std::vector<long long>& suffix) {
    if (j == 1) return eval(n - 1, suffix);
    const auto jj = static_cast<std::size_t>(j);
    const long long kprev = k[jj - 2];
    Rational r = ext_sum_value(kprev + 1, k[jj - 1], [&](long long l) {
      suffix.insert(suffix.begin(), l);
      Rational v = g(n, k, j - 1, suffix);
      suffix.erase(suffix.begin());
      return v;
    });
    std::vector<long long> lowered = k;
    lowered[jj - 2] = kprev - 1;
    suffix.insert(suffix.begin(), kprev);
    r += g(n, lowered, j - 1, suffix);
    suffix.erase(suffix.begin());
    return r;
  }
};

std::mutex& alpha_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Polynomial summation_operator(int n, const Polynomial& a) {
  if (n < 1 || 2 * n - 1 > kMaxVars) throw std::invalid_argument("summation_operator: n out of range");
  if (a.nvars() != 2 * n - 1) throw VariableCountMismatch(a.nvars(), 2 * n - 1);
  return sum_op(n, n, a);
}

const Polynomial& alpha_polynomial(int n) {
  if (n < 1 || n > kMaxSymbolicAlpha) throw std::invalid_argument("alpha_polynomial: n out of range");
  std::lock_guard lock(alpha_mutex());
  static std::map<int, Polynomial> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  Polynomial prev = Polynomial::one(1);
  for (int m = 2; m <= n; ++m) {
    if (auto it = cache.find(m); it != cache.end()) {
      prev = it->second;
      continue;
    }
    // alpha(m-1) moved into the l slots of a (2m-1)-variable polynomial.
    std::vector<VarTarget> to_l;
    for (int j = 1; j < m; ++j) to_l.push_back(VarTarget::to_slot(l_slot(m, j)));
    Polynomial a = remap(prev, 2 * m - 1, std::span<const VarTarget>(to_l));
    Polynomial full = sum_op(m, m, a);
    std::vector<VarTarget> back;
    for (int s = 0; s < 2 * m - 1; ++s) back.push_back(VarTarget::to_slot(s < m ? s : 0));
    prev = remap(full, m, std::span<const VarTarget>(back));
    cache.emplace(m, prev);
  }
  cache.emplace(1, Polynomial::one(1));
  return cache.at(n);
}

Rational alpha_eval(int n, std::span<const long long> k) {
  if (n < 1 || static_cast<int>(k.size()) != n) throw std::invalid_argument("alpha_eval: need n values");
  NumericAlpha na;
  return na.eval(n, std::vector<long long>(k.begin(), k.end()));
}

Rational alpha_eval(int n, std::initializer_list<long long> k) {
  std::vector<long long> v(k);
  return alpha_eval(n, std::span<const long long>(v));
}

Polynomial alpha_poly_first(int n, std::span<const long long> tail) {
  if (n < 1 || static_cast<int>(tail.size()) != n - 1) throw std::invalid_argument("alpha_poly_first: tail must have n-1 entries");
  const long long start = tail.empty() ? 0 : tail.front() - (n + 1) / 2;
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  std::vector<long long> k(static_cast<std::size_t>(n));
  std::copy(tail.begin(), tail.end(), k.begin() + 1);
  NumericAlpha na;
  for (int i = 0; i < n; ++i) {
    k[0] = start + i;
    xs.emplace_back(k[0]);
    ys.push_back(na.eval(n, k));
  }
  auto coeffs = interpolate(xs, ys);
  std::vector<Polynomial::TermType> terms;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d].is_zero()) continue;
    ExponentVector e;
    e.set(0, static_cast<long long>(d));
    terms.push_back({e, coeffs[d]});
  }
  return Polynomial::from_terms(1, std::move(terms));
}

XPoly alpha_m_eval(int n, int m, std::span<const long long> k) {
  if (n < 1 || n > kMaxVars || static_cast<int>(k.size()) != n || m < 0) {
    throw std::invalid_argument("alpha_m_eval: bad arguments");
  }
  XLaurent op = XLaurent::one(n);
  const XPoly x_minus_two = XPoly::x() - XPoly(2);
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      XLaurent factor = XLaurent::one(n) + XLaurent::variable(n, p) * XLaurent::variable(n, q) +
                        XLaurent::monomial(n, XLaurent::variable(n, p).terms().front().exp, x_minus_two);
      op = op * factor;
    }
  }
  XPoly total;
  const auto un = static_cast<std::size_t>(n);
  for (const auto& t : op.terms()) {
    Matrix mat(un, std::vector<Rational>(un));
    for (std::size_t i = 0; i < un; ++i) {
      const long long top = k[i] + t.exp[static_cast<int>(i)];
      for (std::size_t j = 0; j < un; ++j) {
        const long long bottom = static_cast<long long>(j) + (j + 1 == un ? m : 0);
        mat[i][j] = binom(top, bottom);
      }
    }
    Rational det = determinant(std::move(mat));
    if (!det.is_zero()) total += t.coeff * det;
  }
  return total;
}

Polynomial alpha_by_grid_interpolation(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("alpha_by_grid_interpolation: n out of range");
  const auto un = static_cast<std::size_t>(n);
  std::size_t points = 1;
  for (int i = 0; i < n; ++i) points *= un;
  // values[idx], idx in base n with digit i = k_{i+1}.
  std::vector<Rational> values(points);
  std::vector<long long> k(un);
  for (std::size_t idx = 0; idx < points; ++idx) {
    std::size_t r = idx;
    for (std::size_t i = 0; i < un; ++i) {
      k[i] = static_cast<long long>(r % un);
      r /= un;
    }
    values[idx] = alpha_m_eval(n, 0, k).eval(Rational(1));
  }
  // Forward differences in each coordinate give Newton coefficients.
  std::size_t stride = 1;
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t level = 1; level < un; ++level) {
      for (std::size_t idx = points; idx-- > 0;) {
        std::size_t digit = (idx / stride) % un;
        if (digit >= level) values[idx] -= values[idx - stride];
      }
    }
    stride *= un;
  }
  std::vector<std::vector<Polynomial>> binoms(un);
  for (std::size_t i = 0; i < un; ++i) {
    Polynomial b = Polynomial::one(n);
    Polynomial z = Polynomial::variable(n, static_cast<int>(i));
    for (std::size_t d = 0; d < un; ++d) {
      binoms[i].push_back(b);
      b = b * (z - constant_poly(n, Rational(static_cast<long long>(d)))) * Rational(1, static_cast<long long>(d) + 1);
    }
  }
  Polynomial result(n);
  for (std::size_t idx = 0; idx < points; ++idx) {
    if (values[idx].is_zero()) continue;
    Polynomial term = Polynomial::constant(n, values[idx]);
    std::size_t r = idx;
    for (std::size_t i = 0; i < un; ++i) {
      term = term * binoms[i][r % un];
      r /= un;
    }
    result += term;
  }
  return result;
}

}  // namespace vsasm

namespace vsasm {

namespace {

Rational sgn(long long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

// alpha(m) with argument a placed in slot target[a] of an nvars-variable polynomial.
Polynomial alpha_in_slots(int m, int nvars, const std::vector<int>& target) {
  std::vector<VarTarget> t;
  for (int s : target) t.push_back(VarTarget::to_slot(s));
  return remap(alpha_polynomial(m), nvars, std::span<const VarTarget>(t));
}

Polynomial fix_slots(const Polynomial& p, const std::vector<std::pair<int, long long>>& values) {
  Polynomial r = p;
  for (const auto& [slot, v] : values) r = substitute(r, slot, Polynomial::constant(r.nvars(), Rational(v)));
  return r;
}

Rational value_at(const Polynomial& p, int slot, long long v) {
  Polynomial r = fix_slots(p, {{slot, v}});
  if (!r.is_constant()) throw std::logic_error("value_at: polynomial not univariate");
  return r.constant_term();
}

CheckOutcome compare(const Polynomial& lhs, const Polynomial& rhs, const std::string& where) {
  if (lhs == rhs) return CheckOutcome::pass();
  return CheckOutcome::fail(to_string(rhs), to_string(lhs), where);
}

CheckOutcome compare(const Rational& lhs, const Rational& rhs, const std::string& where) {
  if (lhs == rhs) return CheckOutcome::pass();
  return CheckOutcome::fail(rhs.to_string(), lhs.to_string(), where);
}


}  // namespace

CheckOutcome check_alpha_cyclic(int n) {
  // alpha(n; k_2, .., k_n, k_1 - n): argument a sits in slot a+1, the last in slot 0.
  std::vector<int> rotated;
  for (int a = 0; a < n; ++a) rotated.push_back((a + 1) % n);
  Polynomial rhs = shift(alpha_in_slots(n, n, rotated), 0, -n) * sgn(n - 1);
  return compare(alpha_polynomial(n), rhs, "n=" + std::to_string(n));
}

CheckOutcome check_alpha_shift(int n) {
  // Shift every argument by a symbolic c in an extra slot.
  Polynomial a = alpha_polynomial(n).with_nvars(n + 1);
  Polynomial c = Polynomial::variable(n + 1, n);
  Polynomial shifted = a;
  for (int s = 0; s < n; ++s) shifted = substitute(shifted, s, Polynomial::variable(n + 1, s) + c);
  return compare(shifted, a, "n=" + std::to_string(n));
}

CheckOutcome check_lemma_51(int n, int d, int i, std::span<const long long> x) {
  const std::string where = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " i=" + std::to_string(i);
  const Polynomial& alpha = alpha_polynomial(n);
  std::vector<long long> xs(x.begin(), x.end());
  if (i < 0 && static_cast<int>(xs.size()) != -i) throw std::invalid_argument("check_lemma_51: need -i constants");
  // Parts 1/2: univariate comparison.
  std::vector<std::pair<int, long long>> tail;
  std::vector<std::pair<int, long long>> head;
  for (int j = 2; j <= n; ++j) tail.emplace_back(j - 1, static_cast<long long>(j) * d);
  for (int j = 1; j < n; ++j) head.emplace_back(j - 1, static_cast<long long>(j) * d);
  Polynomial p1 = fix_slots(alpha, tail);
  Polynomial p2 = fix_slots(alpha, head);
  Polynomial lhs12;
  Polynomial rhs12;
  if (i >= 0) {
    lhs12 = forward_difference(p1, 0, i);
    rhs12 = backward_difference(p2, n - 1, i);
  } else {
    std::vector<long long> ys;
    for (long long v : xs) ys.push_back(static_cast<long long>(n + 1) * d - v);
    lhs12 = inverse_Delta(p1, 0, make_constants(n, xs));
    rhs12 = inverse_delta(p2, n - 1, make_constants(n, ys));
  }
  auto part12 = compare(sgn(i < 0 ? -i : i) * value_at(lhs12, 0, d + 1), value_at(rhs12, n - 1, static_cast<long long>(n) * d - 1),
                        where + (i >= 0 ? " part 1" : " part 2"));
  if (!part12.passed) return part12;
  // Parts 3/4: multivariate identity against the rotated alpha.
  std::vector<int> rotated;
  for (int a = 0; a < n; ++a) rotated.push_back((a + 1) % n);
  Polynomial rot = alpha_in_slots(n, n, rotated);
  Polynomial lhs;
  Polynomial rhs;
  if (i >= 0) {
    lhs = forward_difference(alpha, 0, i);
    rhs = shift(backward_difference(rot, 0, i), 0, i - n) * sgn(n - 1);
  } else {
    std::vector<long long> ys;
    for (std::size_t m = 0; m < xs.size(); ++m) {
      const long long j = i + static_cast<long long>(m);
      ys.push_back(xs[m] + j - n + 2);
    }
    lhs = inverse_Delta(alpha, 0, make_constants(n, xs));
    rhs = shift(inverse_delta(rot, 0, make_constants(n, ys)), 0, i - n) * sgn(n - 1);
  }
  return compare(lhs, rhs, where + (i >= 0 ? " part 3" : " part 4"));
}

CheckOutcome check_lemma_71(int n, int j, int i, std::span<const long long> x) {
  if (i >= 0 || static_cast<int>(x.size()) != -i || j < 1 || j > n) throw std::invalid_argument("check_lemma_71: bad arguments");
  const int s = -i;
  const int m = n + s;
  const std::string where = "n=" + std::to_string(n) + " j=" + std::to_string(j) + " i=" + std::to_string(i);
  std::vector<long long> xs(x.begin(), x.end());
  // x_{i+r} lives in slot n+r.
  std::vector<std::pair<int, long long>> xvals;
  for (int r = 0; r < s; ++r) xvals.emplace_back(n + r, xs[static_cast<std::size_t>(r)]);
  const Polynomial alpha = alpha_polynomial(n).with_nvars(m);
  const int kj = j - 1;

  // First display.
  {
    std::vector<int> target;
    for (int a = 0; a < j; ++a) target.push_back(a);
    for (int r = 0; r < s; ++r) target.push_back(n + r);
    for (int a = j; a < n; ++a) target.push_back(a);
    Polynomial r = alpha_in_slots(m, m, target);
    for (int a = 0; a < kj; ++a) r = forward_difference(r, a, s);
    for (int q = 0; q < s; ++q) r = backward_difference(r, n + q, q);
    for (int a = kj + 1; a < n; ++a) r = backward_difference(r, a, s);
    r = fix_slots(r, xvals) * sgn(static_cast<long long>(i) * j);
    Polynomial lhs = inverse_Delta(alpha, kj, make_constants(m, xs));
    auto c = compare(lhs, r, where + " Delta display");
    if (!c.passed) return c;
  }
  // Second display: arguments x_{-1}, .., x_i inserted before k_j.
  {
    std::vector<int> target;
    for (int a = 0; a < j - 1; ++a) target.push_back(a);
    for (int r = s - 1; r >= 0; --r) target.push_back(n + r);
    for (int a = j - 1; a < n; ++a) target.push_back(a);
    Polynomial r = alpha_in_slots(m, m, target);
    for (int a = 0; a < kj; ++a) r = forward_difference(r, a, s);
    // Delta^{-i-q}_{x_{-q}}, q = 1..s; x_{-q} is slot n+s-q.
    for (int q = 1; q <= s; ++q) r = forward_difference(r, n + s - q, s - q);
    for (int a = kj + 1; a < n; ++a) r = backward_difference(r, a, s);
    const long long e = static_cast<long long>(j - 1) * i + static_cast<long long>(s) * (s - 1) / 2;
    r = fix_slots(r, xvals) * sgn(e);
    Polynomial lhs = inverse_delta(alpha, kj, make_constants(m, xs));
    return compare(lhs, r, where + " delta display");
  }
}

CheckOutcome check_diagonal_statistics(std::span<const int> bottom, int i) {
  const int n = static_cast<int>(bottom.size());
  const std::string where = "i=" + std::to_string(i);
  const Polynomial& alpha = alpha_polynomial(n);
  auto left = left_diagonal_histogram(bottom);
  auto right = right_diagonal_histogram(bottom);
  auto hist = [](const std::vector<std::uint64_t>& h, int c) {
    return c < static_cast<int>(h.size()) ? Rational(static_cast<long long>(h[static_cast<std::size_t>(c)])) : Rational(0);
  };
  std::vector<std::pair<int, long long>> rest_left;
  for (int a = 1; a < n; ++a) rest_left.emplace_back(a, bottom[static_cast<std::size_t>(a)]);
  Polynomial dl = forward_difference(fix_slots(alpha, rest_left), 0, i);
  auto c = compare(sgn(i) * value_at(dl, 0, bottom.front() + 1), hist(left, i + 1), where + " left");
  if (!c.passed) return c;
  std::vector<std::pair<int, long long>> rest_right;
  for (int a = 0; a + 1 < n; ++a) rest_right.emplace_back(a, bottom[static_cast<std::size_t>(a)]);
  Polynomial dr = backward_difference(fix_slots(alpha, rest_right), n - 1, i);
  return compare(value_at(dr, n - 1, bottom.back() - 1), hist(right, i + 1), where + " right");
}

}  // namespace vsasm
