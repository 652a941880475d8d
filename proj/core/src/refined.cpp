#include "vsasm/refined.hpp"

#include <sstream>
#include <stdexcept>

#include "vsasm/alpha.hpp"
#include "vsasm/binomial.hpp"
#include "vsasm/linalg.hpp"
#include "vsasm/mt.hpp"
#include "vsasm/shiftcalc.hpp"

namespace vsasm {

namespace {

Rational factorial(long long n) {
  Rational r(1);
  for (long long k = 2; k <= n; ++k) r *= Rational(k);
  return r;
}

Rational sign(long long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

Rational vsasm_product(int n) {
  Rational r(1);
  for (long long j = 1; j <= n - 1; ++j) {
    r *= Rational(3 * j - 1) * factorial(2 * j - 1) * factorial(6 * j - 3);
    r /= factorial(4 * j - 2) * factorial(4 * j - 1);
  }
  return r;
}

Rational b_ratio(int n, long long i) {
  const long long m = 2LL * n - 1;
  return binom(2LL * n + i - 2, m) * binom(4LL * n - i - 1, m) / binom(4LL * n - 2, m);
}

Rational eval1(const Polynomial& p, long long x) {
  std::vector<Rational> pt{Rational(x)};
  return eval(p, std::span<const Rational>(pt));
}

std::string rstr(const Rational& r) { return r.to_string(); }

// (-1)^i ^{c}Delta^i_{k} p at `at`; c_j = constant(j) for i < 0.
template <class F>
Rational signed_difference(const Polynomial& p, int i, long long at, F&& constant) {
  Polynomial q;
  if (i >= 0) {
    q = forward_difference(p, 0, i);
  } else {
    std::vector<long long> c;
    for (int j = i; j <= -1; ++j) c.push_back(constant(j));
    q = inverse_Delta(p, 0, make_constants(1, c));
  }
  return sign(i < 0 ? -i : i) * eval1(q, at);
}

std::vector<long long> multiples_tail(int n, int d) {
  std::vector<long long> tail;
  for (int j = 2; j <= n; ++j) tail.push_back(static_cast<long long>(j) * d);
  return tail;
}

// B_{n,k} for whatever k the source provides.
std::map<int, Rational> b_values(int n, ValueSource source) {
  std::map<int, Rational> b;
  switch (source) {
    case ValueSource::kFormula:
      for (int k = 1; k <= 2 * n; ++k) b[k] = b_formula(n, k);
      break;
    case ValueSource::kCDNumbers: {
      auto c = cd_numbers(n, 2, Family::kC);
      for (const auto& [i, v] : c.values) b[n - i] = v;
      break;
    }
    case ValueSource::kBruteForce:
      b = refined_vsasm_bruteforce(n).values;
      break;
  }
  return b;
}

std::map<int, Rational> a_values(int n, ValueSource source) {
  std::map<int, Rational> a;
  switch (source) {
    case ValueSource::kFormula:
    case ValueSource::kCDNumbers: {
      auto c = cd_numbers(n, 1, Family::kC);
      for (int i = 0; i < n; ++i) a[i + 1] = c.at(i);
      break;
    }
    case ValueSource::kBruteForce:
      a = refined_asm_bruteforce(n).values;
      break;
  }
  return a;
}

std::map<int, Rational> bstar_values(int n, ValueSource source) {
  std::map<int, Rational> b;
  if (source == ValueSource::kBruteForce) {
    std::vector<int> bottom;
    for (int j = 1; j <= n; ++j) bottom.push_back(2 * j);
    for (int i = 1; i <= 2 * n + 1; ++i) b[i] = Rational(0);
    for (const auto& [top, c] : top_entry_histogram(bottom)) b[top] = Rational(static_cast<long long>(c));
  } else {
    for (int i = 1; i <= 2 * n + 1; ++i) b[i] = bstar_formula(n, i);
  }
  return b;
}

struct Residuals {
  int checked = 0;
  std::string first_failure;
  Rational failing_value;

  void add(const Rational& residual, const std::string& where) {
    ++checked;
    if (!residual.is_zero() && first_failure.empty()) {
      first_failure = where;
      failing_value = residual;
    }
  }
  CheckOutcome outcome() const {
    if (!first_failure.empty()) return CheckOutcome::fail("0", rstr(failing_value), first_failure);
    return CheckOutcome::pass(std::to_string(checked) + " equations");
  }
};

Rational lookup(const std::map<int, Rational>& m, int k, bool& ok) {
  auto it = m.find(k);
  if (it == m.end()) {
    ok = false;
    return Rational(0);
  }
  return it->second;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::kA: return "A";
    case Family::kB: return "B";
    case Family::kBstar: return "Bstar";
    case Family::kC: return "C";
    case Family::kD: return "D";
  }
  return "?";
}

const Rational& RefinedFamily::at(int i) const {
  auto it = values.find(i);
  if (it == values.end()) throw std::out_of_range("refined family index " + std::to_string(i));
  return it->second;
}

Rational asm_count(int n) {
  Rational r(1);
  for (long long j = 0; j < n; ++j) r *= factorial(3 * j + 1) / factorial(n + j);
  return r;
}

Rational b_formula(int n, int i) {
  if (n < 1) throw std::invalid_argument("b_formula: n must be positive");
  return b_ratio(n, i) * vsasm_product(n);
}

Rational bstar_formula(int n, int i) {
  if (n < 1 || i < 1 || i > 2 * n + 1) throw std::out_of_range("bstar_formula: index out of range");
  Rational s(0);
  for (long long r = 1; r <= i - 1; ++r) s += sign(i + r - 1) * b_ratio(n, r);
  return s * vsasm_product(n);
}

long long c_constant(int j) { return -2LL * j + 1; }

long long d_constant(int n, int d, int j) { return static_cast<long long>(n + 2) * (d + 1) + j - 5; }

RefinedFamily cd_numbers(int n, int d, Family which) {
  if (which != Family::kC && which != Family::kD) throw std::invalid_argument("cd_numbers: family must be C or D");
  RefinedFamily f;
  f.family = which;
  f.n = n;
  f.d = d;
  auto tail = multiples_tail(n, d);
  Polynomial p = alpha_poly_first(n, tail);
  for (int i = -n; i <= n - 1; ++i) {
    f.values[i] = signed_difference(p, i, d + 1, [&](int j) {
      return which == Family::kC ? c_constant(j) : d_constant(n, d, j);
    });
  }
  return f;
}

RefinedFamily refined_asm_bruteforce(int n) {
  std::vector<int> bottom;
  for (int j = 1; j <= n; ++j) bottom.push_back(j);
  auto h = left_diagonal_histogram(bottom);
  RefinedFamily f;
  f.family = Family::kA;
  f.n = n;
  for (int i = 1; i <= n; ++i) f.values[i] = Rational(static_cast<long long>(h[static_cast<std::size_t>(i)]));
  return f;
}

RefinedFamily refined_vsasm_bruteforce(int n) {
  std::vector<int> bottom;
  for (int j = 1; j <= n; ++j) bottom.push_back(2 * j);
  auto h = left_diagonal_histogram(bottom);
  RefinedFamily f;
  f.family = Family::kB;
  f.n = n;
  for (int i = 1; i <= n; ++i) f.values[i] = Rational(static_cast<long long>(h[static_cast<std::size_t>(n + 1 - i)]));
  return f;
}

CheckOutcome verify_les(LesSystem system, int n, ValueSource source) {
  Residuals res;
  switch (system) {
    case LesSystem::kA14: {
      if (source == ValueSource::kFormula) throw std::invalid_argument("A has no formula source");
      auto a = a_values(n, source);
      for (int i = 1; i <= n; ++i) {
        Rational rhs(0);
        for (int j = i; j <= n; ++j) rhs += binom(2LL * n - i - 1, j - i) * sign(j + n) * a.at(j);
        res.add(a.at(i) - rhs, "first line i=" + std::to_string(i));
        res.add(a.at(i) - a.at(n + 1 - i), "symmetry i=" + std::to_string(i));
      }
      break;
    }
    case LesSystem::kB1516: {
      auto b = b_values(n, source);
      for (int i = -n; i <= n - 1; ++i) {
        bool ok = true;
        Rational lhs = lookup(b, n - i, ok);
        Rational rhs(0);
        for (int j = i; j <= n - 1; ++j) rhs += binom(3LL * n - i - 2, j - i) * sign(j + n + 1) * lookup(b, n - j, ok);
        if (ok) res.add(lhs - rhs, "first line i=" + std::to_string(i));
        ok = true;
        lhs = lookup(b, n - i, ok);
        Rational mirror = lookup(b, n + i + 1, ok);
        if (ok) res.add(lhs - mirror, "symmetry i=" + std::to_string(i));
      }
      if (n >= 2) {
        auto prev = b_values(n - 1, source);
        Rational sum(0);
        for (int i = 1; i <= n - 1; ++i) sum += prev.at(i);
        res.add(b.at(1) - sum, "recursion B_{n,1}");
      }
      break;
    }
    case LesSystem::kB65: {
      auto b = b_values(n, source);
      for (int i = 0; i <= n - 1; ++i) {
        Rational s(0);
        for (int j = 0; j <= n - 1; ++j) {
          s += (binom(3LL * n - i - 2, i + j + 1) - binom(3LL * n - i - 2, i - j)) * sign(j) * b.at(n - j);
        }
        res.add(s, "i=" + std::to_string(i));
      }
      break;
    }
  }
  return res.outcome();
}

CheckOutcome verify_prop31(int n, int d) {
  auto c = cd_numbers(n, d, Family::kC);
  Residuals res;
  for (int i = 0; i <= n - 1; ++i) {
    Rational rhs(0);
    for (int j = i; j <= n - 1; ++j) {
      rhs += binom(static_cast<long long>(n) * (d + 1) - i - 2, j - i) * sign(j + n + 1) * c.at(j);
    }
    res.add(c.at(i) - rhs, "i=" + std::to_string(i));
  }
  return res.outcome();
}

CheckOutcome verify_prop52(int n, int d) {
  auto c = cd_numbers(n, d, Family::kC);
  auto dd = cd_numbers(n, d, Family::kD);
  Residuals res;
  for (int i = -n; i <= n - 1; ++i) {
    Rational rhs(0);
    for (int j = i; j <= n - 1; ++j) {
      rhs += binom(static_cast<long long>(n) * (d + 1) - i - 2, j - i) * sign(j + n + 1) * dd.at(j);
    }
    res.add(c.at(i) - rhs, "i=" + std::to_string(i));
  }
  return res.outcome();
}

LesRankReport les_rank(int n, LesSystem system) {
  LesRankReport r;
  const auto un = static_cast<std::size_t>(n);
  if (system == LesSystem::kB1516) {
    const std::size_t cols = 2 * un;
    auto col = [&](int i) { return static_cast<std::size_t>(i + n); };
    Matrix m;
    for (int i = -n; i <= n - 1; ++i) {
      std::vector<Rational> row(cols, Rational(0));
      row[col(i)] += Rational(1);
      for (int j = i; j <= n - 1; ++j) row[col(j)] -= binom(3LL * n - i - 2, j - i) * sign(j + n + 1);
      m.push_back(row);
      std::vector<Rational> sym(cols, Rational(0));
      sym[col(i)] += Rational(1);
      sym[col(-i - 1)] -= Rational(1);
      m.push_back(sym);
    }
    r.unknowns = static_cast<int>(cols);
    r.rank = rank(m);
    Matrix e(cols, std::vector<Rational>(cols));
    for (std::size_t i = 1; i <= cols; ++i) {
      for (std::size_t j = 1; j <= cols; ++j) {
        auto ii = static_cast<long long>(i);
        auto jj = static_cast<long long>(j);
        e[i - 1][j - 1] = binom(4LL * n - ii - 1, 2LL * n - ii - jj + 1) * sign(jj + 1) - Rational(i == j ? 1 : 0);
      }
    }
    r.eigen_rank = rank(std::move(e));
  } else if (system == LesSystem::kB65) {
    Matrix m(un, std::vector<Rational>(un));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            (binom(3LL * n - i - 2, i + j + 1) - binom(3LL * n - i - 2, i - j)) * sign(j);
      }
    }
    r.unknowns = n;
    r.rank = rank(std::move(m));
  } else {
    Matrix m;
    for (int i = 1; i <= n; ++i) {
      std::vector<Rational> row(un, Rational(0));
      row[static_cast<std::size_t>(i - 1)] += Rational(1);
      for (int j = i; j <= n; ++j) row[static_cast<std::size_t>(j - 1)] -= binom(2LL * n - i - 1, j - i) * sign(j + n);
      m.push_back(row);
      std::vector<Rational> sym(un, Rational(0));
      sym[static_cast<std::size_t>(i - 1)] += Rational(1);
      sym[static_cast<std::size_t>(n - i)] -= Rational(1);
      m.push_back(sym);
    }
    r.unknowns = n;
    r.rank = rank(std::move(m));
  }
  r.solution_dimension = r.unknowns - r.rank;
  return r;
}

Rational dpp_determinant(int size) {
  if (size <= 0) return Rational(1);
  const auto us = static_cast<std::size_t>(size);
  Matrix m(us, std::vector<Rational>(us));
  for (std::size_t i = 1; i <= us; ++i) {
    for (std::size_t j = 1; j <= us; ++j) {
      m[i - 1][j - 1] = binom(static_cast<long long>(i + j), static_cast<long long>(j) - 1) + Rational(i == j ? 1 : 0);
    }
  }
  return determinant(std::move(m));
}

CheckOutcome hypergeom_63(int i, int d1) {
  if (i < 0 || d1 < 4) throw std::invalid_argument("hypergeom_63: need i >= 0 and d1 >= 4");
  Rational lhs(0);
  for (long long l = 1; l <= i; ++l) {
    lhs += sign(l) * binom(static_cast<long long>(i) + l, i - l) * binom(2 * l + 2 - d1, l + 3 - d1) *
           Rational(d1 - 3) / Rational(l);
  }
  Rational rhs = binom(static_cast<long long>(i), d1 - 3) * sign(d1 + 1);
  if (lhs != rhs) return CheckOutcome::fail(rstr(rhs), rstr(lhs), "i=" + std::to_string(i) + " d1=" + std::to_string(d1));
  return CheckOutcome::pass();
}

std::map<int, Rational> prop61_values(const Polynomial& p, int max_i) {
  std::map<int, Rational> c;
  for (int i = -max_i - 1; i <= max_i; ++i) c[i] = signed_difference(p, i, 3, [](int j) { return c_constant(j); });
  return c;
}

CheckOutcome verify_prop61(const Polynomial& p, int max_i) {
  auto c = prop61_values(p, max_i);
  Residuals res;
  for (int i = 0; i <= max_i; ++i) res.add(c.at(i) - c.at(-i - 1), "i=" + std::to_string(i));
  return res.outcome();
}

CheckOutcome verify_symmetry_c(int n, int d) {
  auto c = cd_numbers(n, d, Family::kC);
  Residuals res;
  for (int i = 0; i <= n - 1; ++i) res.add(c.at(i) - c.at(-i - 1), "i=" + std::to_string(i));
  return res.outcome();
}

CheckOutcome verify_cd_equal(int n) {
  auto tail = multiples_tail(n, 2);
  Polynomial p = alpha_poly_first(n, tail);
  auto c = cd_numbers(n, 2, Family::kC);
  auto d = cd_numbers(n, 2, Family::kD);
  Residuals res;
  for (int i = -n; i <= -1; ++i) {
    const std::string at = "i=" + std::to_string(i);
    res.add(c.at(i) - d.at(i), "C=D " + at);
    std::vector<long long> xs;
    std::vector<long long> zs;
    for (int j = i; j <= -1; ++j) {
      xs.push_back(c_constant(j));
      zs.push_back(3LL * n + j + 1);
    }
    Polynomial px = inverse_Delta(p, 0, make_constants(1, xs));
    Polynomial pz = inverse_Delta(p, 0, make_constants(1, zs));
    res.add(eval1(px, 3LL * n + 2 + i), "vanishing " + at);
    Polynomial diff = px - pz;
    res.add(diff.is_zero() ? Rational(0) : Rational(1), "polynomial identity " + at);
  }
  return res.outcome();
}

CheckOutcome verify_cross_identities(int n, ValueSource source) {
  if (n < 2) throw std::invalid_argument("verify_cross_identities: n must be at least 2");
  Residuals res;
  auto b = b_values(n, source);
  auto bs = bstar_values(n, source);
  for (int i = 1; i <= n; ++i) res.add(b.at(i) - bs.at(i) - bs.at(i + 1), "B=B*+B* i=" + std::to_string(i));
  auto bprev = b_values(n - 1, source);
  Rational sb(0);
  for (int i = 1; i <= n - 1; ++i) sb += bprev.at(i);
  res.add(b.at(1) - sb, "B_{n,1} recursion");
  auto a = a_values(n, source);
  auto aprev = a_values(n - 1, source);
  Rational sa(0);
  for (int i = 1; i <= n - 1; ++i) sa += aprev.at(i);
  res.add(a.at(1) - sa, "A_{n,1} recursion");
  return res.outcome();
}

}  // namespace vsasm
