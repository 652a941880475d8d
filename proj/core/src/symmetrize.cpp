#include "vsasm/symmetrize.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <unordered_map>

#include "vsasm/binomial.hpp"
#include "vsasm/parallel.hpp"

namespace vsasm {

namespace {

struct SignedPerm {
  std::vector<int> images;
  int sign;
};

std::vector<SignedPerm> all_permutations(int n) {
  std::vector<SignedPerm> out;
  Permutation p = Permutation::identity(n);
  do {
    out.push_back({p.images(), p.sign()});
  } while (p.next());
  return out;
}

template <class C>
bool sort_descending(ExponentVector& e, int n, int& sign) {
  std::array<int, kMaxVars> v{};
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = e[i];
  sign = 1;
  for (int i = 1; i < n; ++i) {
    int x = v[static_cast<std::size_t>(i)];
    int j = i - 1;
    while (j >= 0 && v[static_cast<std::size_t>(j)] < x) {
      v[static_cast<std::size_t>(j + 1)] = v[static_cast<std::size_t>(j)];
      sign = -sign;
      --j;
    }
    if (j >= 0 && v[static_cast<std::size_t>(j)] == x) return false;
    v[static_cast<std::size_t>(j + 1)] = x;
  }
  for (int i = 0; i < n; ++i) e.set(i, v[static_cast<std::size_t>(i)]);
  return true;
}

}  // namespace

// ASym(z^e) = sgn(pi) * a_lambda where lambda is e sorted decreasingly.
// Returns the nonzero a_lambda coefficients, sorted by lambda.
template <class C>
std::vector<Term<C>> fold_alternants(const LaurentPolynomial<C>& num) {
  const int n = num.nvars();
  std::unordered_map<ExponentVector, C, ExponentHash> folded;
  for (const auto& t : num.terms()) {
    ExponentVector lambda = t.exp;
    int sign = 1;
    if (!sort_descending<C>(lambda, n, sign)) continue;
    auto [it, inserted] = folded.try_emplace(lambda, C{});
    if (sign > 0) {
      it->second += t.coeff;
    } else {
      it->second -= t.coeff;
    }
  }
  std::vector<Term<C>> lambdas;
  lambdas.reserve(folded.size());
  for (auto& [e, c] : folded) {
    if (!c.is_zero()) lambdas.push_back({e, std::move(c)});
  }
  std::sort(lambdas.begin(), lambdas.end(), [](const Term<C>& a, const Term<C>& b) { return a.exp < b.exp; });
  return lambdas;
}

template <class C>
LaurentPolynomial<C> asym(const LaurentPolynomial<C>& num, int threads) {
  const int n = num.nvars();
  if (n <= 1) return num;
  const auto lambdas = fold_alternants(num);

  const auto perms = all_permutations(n);
  const std::size_t block = 256;
  const std::size_t blocks = (lambdas.size() + block - 1) / block;
  std::vector<std::vector<Term<C>>> parts(blocks);
  parallel_blocks(blocks, threads, [&](std::size_t b) {
    auto& out = parts[b];
    std::size_t end = std::min(lambdas.size(), (b + 1) * block);
    out.reserve((end - b * block) * perms.size());
    for (std::size_t k = b * block; k < end; ++k) {
      const auto& lt = lambdas[k];
      C neg = -lt.coeff;
      for (const auto& p : perms) {
        ExponentVector e;
        for (int i = 0; i < n; ++i) e.set(p.images[static_cast<std::size_t>(i)], lt.exp[i]);
        out.push_back({e, p.sign > 0 ? lt.coeff : neg});
      }
    }
  });
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<Term<C>> all;
  all.reserve(total);
  for (auto& p : parts) {
    std::move(p.begin(), p.end(), std::back_inserter(all));
    std::vector<Term<C>>().swap(p);
  }
  // Alternants of distinct decreasing vectors have disjoint supports.
  LaurentPolynomial<C>::sort_terms(all);
  return LaurentPolynomial<C>::from_sorted_terms(n, std::move(all));
}

template <class C>
LaurentPolynomial<C> asym_by_permutations(const LaurentPolynomial<C>& num, int threads) {
  const int n = num.nvars();
  const std::uint64_t count = factorial(n);
  const std::uint64_t block = 24;
  const std::size_t blocks = static_cast<std::size_t>((count + block - 1) / block);
  std::vector<LaurentPolynomial<C>> partial(blocks, LaurentPolynomial<C>(n));
  parallel_blocks(blocks, threads, [&](std::size_t b) {
    std::uint64_t first = b * block;
    std::uint64_t last = std::min(count, first + block);
    Permutation p = Permutation::unrank(n, first);
    LaurentPolynomial<C> acc(n);
    for (std::uint64_t r = first; r < last; ++r) {
      auto term = permute(num, p);
      if (p.sign() > 0) {
        acc += term;
      } else {
        acc -= term;
      }
      p.next();
    }
    partial[b] = std::move(acc);
  });
  LaurentPolynomial<C> result(n);
  for (const auto& p : partial) result += p;
  return result;
}

template <class C>
std::vector<Term<C>> sym_dominant(const OverVandermonde<C>& f) {
  const int n = f.nvars();
  if (n <= 1) {
    std::vector<Term<C>> out(f.numerator.terms().rbegin(), f.numerator.terms().rend());
    return out;
  }
  const auto lambdas = fold_alternants(f.numerator);
  if (lambdas.empty()) return {};

  // numerator-side alternant coefficients A_lambda, lambda strictly decreasing.
  std::unordered_map<ExponentVector, C, ExponentHash> a_coeff;
  int lo = lambdas.front().exp[n - 1];
  int hi = lambdas.front().exp[0];
  long deg_lo = 0;
  long deg_hi = 0;
  bool first = true;
  for (const auto& t : lambdas) {
    a_coeff.emplace(t.exp, t.coeff);
    long d = 0;
    for (int i = 0; i < n; ++i) d += t.exp[i];
    lo = std::min(lo, static_cast<int>(t.exp[n - 1]));
    hi = std::max(hi, static_cast<int>(t.exp[0]));
    deg_lo = first ? d : std::min(deg_lo, d);
    deg_hi = first ? d : std::max(deg_hi, d);
    first = false;
  }
  const long shift = static_cast<long>(n) * (n - 1) / 2;
  hi -= n - 1;
  deg_lo -= shift;
  deg_hi -= shift;
  // V = eps * a_delta with a_delta = prod_{i<j} (z_i - z_j).
  const bool eps_negative = (shift % 2) != 0;

  // delta - sigma(delta) for every non-identity sigma, with its sign.
  struct Offset {
    std::array<int, kMaxVars> d;
    int sign;
  };
  std::vector<Offset> offsets;
  for (const auto& p : all_permutations(n)) {
    Offset o{};
    bool identity = true;
    for (int i = 0; i < n; ++i) {
      int img = p.images[static_cast<std::size_t>(i)];
      o.d[static_cast<std::size_t>(img)] = (n - 1 - img) - (n - 1 - i);
      identity = identity && img == i;
    }
    o.sign = p.sign;
    if (!identity) offsets.push_back(o);
  }

  // R * a_delta = eps * A; the coefficient of z^{mu+delta} gives
  // r(mu) = eps * A_{mu+delta} - sum_{sigma != id} sgn(sigma) r(sort(mu + delta - sigma delta)),
  // where every referenced sorted vector is lexicographically larger than mu.
  std::unordered_map<ExponentVector, C, ExponentHash> r;
  std::vector<Term<C>> out;
  std::array<int, kMaxVars> mu{};
  std::array<int, kMaxVars> x{};

  auto visit = [&]() {
    ExponentVector lam;
    for (int i = 0; i < n; ++i) lam.set(i, mu[static_cast<std::size_t>(i)] + (n - 1 - i));
    C value{};
    if (auto it = a_coeff.find(lam); it != a_coeff.end()) value = eps_negative ? -it->second : it->second;
    for (const auto& o : offsets) {
      bool inside = true;
      for (int i = 0; i < n && inside; ++i) {
        int v = mu[static_cast<std::size_t>(i)] + o.d[static_cast<std::size_t>(i)];
        x[static_cast<std::size_t>(i)] = v;
        inside = v >= lo && v <= hi;
      }
      if (!inside) continue;
      std::sort(x.begin(), x.begin() + n, std::greater<>());
      ExponentVector key;
      for (int i = 0; i < n; ++i) key.set(i, x[static_cast<std::size_t>(i)]);
      auto it = r.find(key);
      if (it == r.end()) continue;
      if (o.sign > 0) {
        value -= it->second;
      } else {
        value += it->second;
      }
    }
    if (value.is_zero()) return;
    ExponentVector e;
    for (int i = 0; i < n; ++i) e.set(i, mu[static_cast<std::size_t>(i)]);
    r.emplace(e, value);
    out.push_back({e, std::move(value)});
  };

  // Weakly decreasing mu in [lo, hi]^n, lexicographically decreasing, with
  // total degree in [deg_lo, deg_hi].
  auto rec = [&](auto&& self, int pos, int cap, long sum) -> void {
    if (pos == n) {
      if (sum >= deg_lo && sum <= deg_hi) visit();
      return;
    }
    const long left = n - pos - 1;
    for (int v = cap; v >= lo; --v) {
      if (sum + v + left * v < deg_lo) break;
      if (sum + v + left * lo > deg_hi) continue;
      mu[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v, sum + v);
    }
  };
  if (lo <= hi) rec(rec, 0, hi, 0);
  return out;
}

template <class C>
LaurentPolynomial<C> expand_symmetric(int nvars, const std::vector<Term<C>>& dominant, int threads) {
  const std::size_t block = 64;
  const std::size_t blocks = (dominant.size() + block - 1) / block;
  std::vector<std::vector<Term<C>>> parts(blocks);
  parallel_blocks(blocks, threads, [&](std::size_t b) {
    std::size_t end = std::min(dominant.size(), (b + 1) * block);
    for (std::size_t k = b * block; k < end; ++k) {
      std::array<int, kMaxVars> v{};
      for (int i = 0; i < nvars; ++i) v[static_cast<std::size_t>(i)] = dominant[k].exp[i];
      std::sort(v.begin(), v.begin() + nvars);
      do {
        ExponentVector e;
        for (int i = 0; i < nvars; ++i) e.set(i, v[static_cast<std::size_t>(i)]);
        parts[b].push_back({e, dominant[k].coeff});
      } while (std::next_permutation(v.begin(), v.begin() + nvars));
    }
  });
  std::vector<Term<C>> all;
  for (auto& p : parts) {
    std::move(p.begin(), p.end(), std::back_inserter(all));
    std::vector<Term<C>>().swap(p);
  }
  LaurentPolynomial<C>::sort_terms(all);
  return LaurentPolynomial<C>::from_sorted_terms(nvars, std::move(all));
}

template <class C>
LaurentPolynomial<C> sym_over_vandermonde(const OverVandermonde<C>& f, int threads) {
  return expand_symmetric(f.nvars(), sym_dominant(f), threads);
}

template <class C>
LaurentPolynomial<C> sym_over_vandermonde_by_division(const OverVandermonde<C>& f, int threads) {
  return divide_by_vandermonde(asym(f.numerator, threads));
}

OverVandermonde<Rational> build_P(int s, int t) {
  if (s < 0 || t < 0) throw std::invalid_argument("build_P: negative parameter");
  const int n = s + t - 1;
  if (n < 1) throw std::invalid_argument("build_P: needs s + t - 1 >= 1");
  if (n > kMaxVars) throw std::invalid_argument("build_P: too many variables");
  Polynomial one = Polynomial::one(n);
  Polynomial num = one;
  ExponentVector mono;
  for (int i = 1; i <= n; ++i) {
    int power = i <= s ? 2 * s - 2 * i - t + 1 : 2 * i - 2 * s - t;
    int k = i <= s ? i - 1 : s;
    mono.add(i - 1, power);
    if (k > 0) num *= (one - Polynomial::variable(n, i - 1, -1)).pow(k);
  }
  num = num.shifted(mono);
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      Polynomial zp = Polynomial::variable(n, p);
      num *= one - zp + zp * Polynomial::variable(n, q);
    }
  }
  return {num};
}

Polynomial build_R(int s, int t, int threads) { return sym_over_vandermonde(build_P(s, t), threads); }

CheckOutcome check_inversion_invariance(const Polynomial& r, InversionMode mode) {
  auto compare = [&](const std::vector<int>& which) -> CheckOutcome {
    Polynomial inv = invert_vars(r, std::span<const int>(which));
    if (inv == r) return CheckOutcome::pass();
    Polynomial diff = r - inv;
    const auto& t = diff.terms().front();
    std::string where = "z";
    for (std::size_t k = 0; k < which.size(); ++k) where += (k ? ",z" : "") + std::to_string(which[k] + 1);
    return CheckOutcome::fail("invariant under " + where + " -> inverse", "differs",
                              to_string(Polynomial::monomial(r.nvars(), t.exp, t.coeff)));
  };
  if (mode == InversionMode::kAllVariables) {
    std::vector<int> all;
    for (int i = 0; i < r.nvars(); ++i) all.push_back(i);
    return compare(all);
  }
  for (int i = 0; i < r.nvars(); ++i) {
    auto c = compare({i});
    if (!c.passed) return c;
  }
  return CheckOutcome::pass();
}

CheckOutcome check_symmetric_inversion_invariance(int nvars, const std::vector<Term<Rational>>& dominant) {
  std::unordered_map<ExponentVector, const Rational*, ExponentHash> index;
  for (const auto& t : dominant) index.emplace(t.exp, &t.coeff);
  static const Rational zero;
  auto lookup = [&](const ExponentVector& e) -> const Rational& {
    auto it = index.find(e);
    return it == index.end() ? zero : *it->second;
  };
  // Only one variable needs checking; the position of mu_i in the orbit is free.
  for (const auto& t : dominant) {
    for (int i = 0; i < nvars; ++i) {
      if (t.exp[i] == 0 || (i > 0 && t.exp[i] == t.exp[i - 1])) continue;
      std::array<int, kMaxVars> v{};
      for (int k = 0; k < nvars; ++k) v[static_cast<std::size_t>(k)] = t.exp[k];
      v[static_cast<std::size_t>(i)] = -v[static_cast<std::size_t>(i)];
      std::sort(v.begin(), v.begin() + nvars, std::greater<>());
      ExponentVector image;
      for (int k = 0; k < nvars; ++k) image.set(k, v[static_cast<std::size_t>(k)]);
      if (!(lookup(image) == t.coeff)) {
        ExponentVector w = t.exp;
        w.set(0, t.exp[i]);
        w.set(i, t.exp[0]);
        return CheckOutcome::fail("invariant under z1 -> inverse", "differs",
                                  to_string(Polynomial::monomial(nvars, w, t.coeff)));
      }
    }
  }
  return CheckOutcome::pass();
}

namespace {

// Coefficient of z^j in gamma(z)^k = (z^(1/2) - z^(-1/2))^(2k), |j| <= k.
Rational gamma_coeff(int k, int j) {
  Rational c = binom(2 * k, k - j);
  return (k - j) % 2 == 0 ? c : -c;
}

// Writes r = sum_k gamma(z_v)^k r_k with r_k free of z_v. Terms are grouped by
// their exponents away from z_v and each group is converted on its own.
std::vector<Polynomial> split_variable(const Polynomial& r, int v) {
  const int n = r.nvars();
  const int top = std::max(r.max_exponent(v), 0);
  auto fail = [v] {
    return std::invalid_argument("gamma_expand: not invariant under z" + std::to_string(v + 1) + " -> inverse");
  };
  if (r.min_exponent(v) != -r.max_exponent(v)) throw fail();
  std::map<ExponentVector, std::vector<Rational>> groups;
  for (const auto& t : r.terms()) {
    ExponentVector rest = t.exp;
    rest.set(v, 0);
    auto& line = groups[rest];
    if (line.empty()) line.assign(static_cast<std::size_t>(2 * top + 1), Rational(0));
    line[static_cast<std::size_t>(t.exp[v] + top)] = t.coeff;
  }
  std::vector<std::vector<Term<Rational>>> parts(static_cast<std::size_t>(top + 1));
  for (auto& [rest, line] : groups) {
    auto at = [&](int j) -> Rational& { return line[static_cast<std::size_t>(j + top)]; };
    for (int j = 1; j <= top; ++j) {
      if (at(j) != at(-j)) throw fail();
    }
    for (int d = top; d >= 0; --d) {
      const Rational c = at(d);
      if (c.is_zero()) continue;
      for (int j = -d; j <= d; ++j) at(j) -= c * gamma_coeff(d, j);
      parts[static_cast<std::size_t>(d)].push_back({rest, c});
    }
  }
  std::vector<Polynomial> out;
  for (auto& terms : parts) out.push_back(Polynomial::from_terms(n, std::move(terms)));
  return out;
}

void expand_rec(const Polynomial& r, int v, std::vector<int>& index, GammaExpansion& out) {
  if (r.is_zero()) return;
  if (v == r.nvars()) {
    Rational c = r.constant_term();
    if (c.sign() < 0 || !c.is_integer()) out.all_nonnegative_integers = false;
    out.coefficients.emplace(index, c);
    return;
  }
  auto parts = split_variable(r, v);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    index[static_cast<std::size_t>(v)] = static_cast<int>(k);
    expand_rec(parts[k], v + 1, index, out);
  }
  index[static_cast<std::size_t>(v)] = 0;
}

}  // namespace

GammaExpansion gamma_expand(const Polynomial& r) {
  GammaExpansion out;
  std::vector<int> index(static_cast<std::size_t>(r.nvars()), 0);
  expand_rec(r, 0, index, out);
  return out;
}

Polynomial gamma_recombine(const GammaExpansion& g, int nvars) {
  // Exponent k in slot v stands for gamma(z_v)^k; convert one slot at a time.
  std::vector<Term<Rational>> terms;
  for (const auto& [index, c] : g.coefficients) {
    ExponentVector e;
    for (int v = 0; v < nvars; ++v) e.set(v, index[static_cast<std::size_t>(v)]);
    terms.push_back({e, c});
  }
  Polynomial cur = Polynomial::from_terms(nvars, std::move(terms));
  for (int v = 0; v < nvars; ++v) {
    std::map<ExponentVector, std::vector<Rational>> groups;
    for (const auto& t : cur.terms()) {
      ExponentVector rest = t.exp;
      rest.set(v, 0);
      auto& line = groups[rest];
      const auto k = static_cast<std::size_t>(t.exp[v]);
      if (line.size() <= k) line.resize(k + 1, Rational(0));
      line[k] = t.coeff;
    }
    std::vector<Term<Rational>> next;
    for (const auto& [rest, line] : groups) {
      const int top = static_cast<int>(line.size()) - 1;
      for (int j = -top; j <= top; ++j) {
        Rational c;
        for (int k = std::abs(j); k <= top; ++k) {
          if (!line[static_cast<std::size_t>(k)].is_zero()) c += line[static_cast<std::size_t>(k)] * gamma_coeff(k, j);
        }
        if (c.is_zero()) continue;
        ExponentVector e = rest;
        e.set(v, j);
        next.push_back({e, c});
      }
    }
    cur = Polynomial::from_terms(nvars, std::move(next));
  }
  return cur;
}

template LaurentPolynomial<Rational> asym(const LaurentPolynomial<Rational>&, int);
template LaurentPolynomial<XPoly> asym(const LaurentPolynomial<XPoly>&, int);
template LaurentPolynomial<Rational> asym_by_permutations(const LaurentPolynomial<Rational>&, int);
template LaurentPolynomial<XPoly> asym_by_permutations(const LaurentPolynomial<XPoly>&, int);
template LaurentPolynomial<Rational> sym_over_vandermonde(const OverVandermonde<Rational>&, int);
template LaurentPolynomial<XPoly> sym_over_vandermonde(const OverVandermonde<XPoly>&, int);
template LaurentPolynomial<Rational> sym_over_vandermonde_by_division(const OverVandermonde<Rational>&, int);
template LaurentPolynomial<XPoly> sym_over_vandermonde_by_division(const OverVandermonde<XPoly>&, int);
template std::vector<Term<Rational>> sym_dominant(const OverVandermonde<Rational>&);
template std::vector<Term<XPoly>> sym_dominant(const OverVandermonde<XPoly>&);
template LaurentPolynomial<Rational> expand_symmetric(int, const std::vector<Term<Rational>>&, int);
template LaurentPolynomial<XPoly> expand_symmetric(int, const std::vector<Term<XPoly>>&, int);

}  // namespace vsasm
