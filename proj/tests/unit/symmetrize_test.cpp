#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "random_poly.hpp"
#include "vsasm/symmetrize.hpp"

namespace vsasm {
namespace {

Polynomial P(std::string_view text, int n) { return parse_polynomial(text, n); }

Polynomial sum_over_permutations(const Polynomial& g) {
  Polynomial sum(g.nvars());
  Permutation p = Permutation::identity(g.nvars());
  do {
    sum += permute(g, p);
  } while (p.next());
  return sum;
}

TEST(Asym, Examples) {
  EXPECT_EQ(asym(P("z2", 2)), P("z2-z1", 2));
  EXPECT_TRUE(asym(P("z1*z2", 2)).is_zero());
  EXPECT_EQ(asym(P("z2*z3^2", 3)), vandermonde(3));
}

TEST(Asym, MatchesPermutationSumAndIsAntisymmetric) {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 4; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      auto f = testing::random_poly(rng, n, 8, -2, 3);
      auto a = asym(f, 2);
      EXPECT_EQ(a, asym_by_permutations(f, 3));
      Permutation p = Permutation::identity(n);
      do {
        Polynomial expected = a;
        if (p.sign() < 0) expected = -expected;
        EXPECT_EQ(permute(a, p), expected);
      } while (p.next());
      EXPECT_NO_THROW(divide_by_vandermonde(a));
    }
  }
}

TEST(SymOverVandermonde, Examples) {
  EXPECT_EQ(sym_over_vandermonde(OverVandermonde<Rational>{P("z2", 2)}), Polynomial::one(2));
  EXPECT_EQ(sym_over_vandermonde(OverVandermonde<Rational>{P("z1", 2)}), -Polynomial::one(2));
  EXPECT_EQ(sym_over_vandermonde(build_P(1, 2)), Polynomial::one(2));
}

TEST(SymOverVandermonde, SymmetricTimesVandermondeGivesFactorialMultiple) {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 4; ++n) {
    auto g = sum_over_permutations(testing::random_poly(rng, n, 4, -2, 2));
    auto r = sym_over_vandermonde(OverVandermonde<Rational>{g * vandermonde(n)});
    EXPECT_EQ(r, g * Rational(static_cast<long long>(factorial(n))));
  }
}

TEST(SymOverVandermonde, DominantSolverMatchesDivision) {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 5; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      OverVandermonde<Rational> f{testing::random_poly(rng, n, 10, -3, 3)};
      EXPECT_EQ(sym_over_vandermonde(f), sym_over_vandermonde_by_division(f)) << "n=" << n;
    }
  }
  XLaurent num = to_xlaurent(testing::random_poly(rng, 3, 6, -1, 2)) * XLaurent::constant(3, XPoly::x()) +
                 to_xlaurent(testing::random_poly(rng, 3, 6, -1, 2));
  OverVandermonde<XPoly> fx{num};
  EXPECT_EQ(sym_over_vandermonde(fx), sym_over_vandermonde_by_division(fx));
}

TEST(BuildP, Examples) {
  auto p11 = build_P(1, 1);
  EXPECT_EQ(p11.nvars(), 1);
  EXPECT_EQ(p11.numerator, Polynomial::one(1));

  auto p12 = build_P(1, 2);
  EXPECT_EQ(p12.numerator, P("z1^-1", 2) * P("1-z2^-1", 2) * P("1-z1+z1*z2", 2));

  auto p03 = build_P(0, 3);
  EXPECT_EQ(p03.numerator, P("z1^-1*z2", 2) * P("1-z1+z1*z2", 2));
}

TEST(BuildR, SmallCases) {
  EXPECT_EQ(build_R(1, 1), Polynomial::one(1));
  EXPECT_EQ(build_R(1, 2), Polynomial::one(2));
  EXPECT_EQ(build_R(0, 3), P("z1^-1+z2^-1-1+z2+z1", 2));
  auto r22 = build_R(2, 2);
  EXPECT_EQ(r22.nvars(), 3);
  EXPECT_TRUE(check_inversion_invariance(r22, InversionMode::kEachVariable).passed);
  EXPECT_EQ(r22, sym_over_vandermonde_by_division(build_P(2, 2)));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(BuildR, MatchesGoldenFiles) {
  for (int n = 1; n <= 4; ++n) {
    for (int s = 0; s <= n + 1; ++s) {
      int t = n + 1 - s;
      if (t < 1) continue;
      std::string path = std::string(VSASM_GOLDEN_DIR) + "/R_s" + std::to_string(s) + "_t" + std::to_string(t) + ".txt";
      std::string text = read_file(path);
      ASSERT_FALSE(text.empty()) << path;
      while (!text.empty() && text.back() == '\n') text.pop_back();
      EXPECT_EQ(to_string(build_R(s, t)), text) << path;
    }
  }
}

TEST(Inversion, Examples) {
  EXPECT_TRUE(check_inversion_invariance(Polynomial::one(2), InversionMode::kEachVariable).passed);
  EXPECT_TRUE(check_inversion_invariance(P("z1+z1^-1", 1), InversionMode::kEachVariable).passed);
  auto bad = check_inversion_invariance(P("z1", 1), InversionMode::kEachVariable);
  EXPECT_FALSE(bad.passed);
  EXPECT_FALSE(bad.witness.empty());
}

TEST(Inversion, ConjectureInstancesUpToFiveVariables) {
  for (int n = 1; n <= 5; ++n) {
    for (int s = 0; s <= n + 1; ++s) {
      int t = n + 1 - s;
      if (t < 1) continue;
      auto dom = sym_dominant(build_P(s, t));
      auto r = expand_symmetric(n, dom);
      auto single = check_inversion_invariance(r, InversionMode::kEachVariable);
      EXPECT_EQ(single.passed, check_symmetric_inversion_invariance(n, dom).passed);
      if (s <= t) {
        EXPECT_TRUE(single.passed) << "s=" << s << " t=" << t;
        EXPECT_TRUE(check_inversion_invariance(r, InversionMode::kAllVariables).passed);
      }
    }
  }
}

TEST(Inversion, SGreaterThanTBreaksSingleVariableInvariance) {
  EXPECT_FALSE(check_inversion_invariance(build_R(3, 2), InversionMode::kEachVariable).passed);
}

TEST(Gamma, Examples) {
  auto one = gamma_expand(Polynomial::one(2));
  ASSERT_EQ(one.coefficients.size(), 1u);
  EXPECT_EQ(one.coefficients.at({0, 0}), Rational(1));

  auto g = gamma_expand(P("z1+z1^-1", 1));
  EXPECT_EQ(g.coefficients.size(), 2u);
  EXPECT_EQ(g.coefficients.at({1}), Rational(1));
  EXPECT_EQ(g.coefficients.at({0}), Rational(2));
  EXPECT_TRUE(g.all_nonnegative_integers);

  EXPECT_THROW(gamma_expand(P("z1", 1)), std::invalid_argument);
}

TEST(Gamma, RecombineMatchesPowers) {
  const Polynomial g1 = P("z1-2+z1^-1", 2);
  const Polynomial g2 = P("z2-2+z2^-1", 2);
  GammaExpansion e;
  e.coefficients[{2, 1}] = Rational(3);
  e.coefficients[{0, 3}] = Rational(-1, 2);
  e.coefficients[{0, 0}] = Rational(5);
  Polynomial expected = Rational(3) * g1.pow(2) * g2 - Rational(1, 2) * g2.pow(3) + Rational(5) * Polynomial::one(2);
  EXPECT_EQ(gamma_recombine(e, 2), expected);
  auto back = gamma_expand(expected);
  EXPECT_EQ(back.coefficients, e.coefficients);
  EXPECT_FALSE(back.all_nonnegative_integers);
  // Balanced degrees in z1 but the z2-parts differ.
  EXPECT_THROW(gamma_expand(P("z1+z1^-1*z2", 2)), std::invalid_argument);
}

TEST(Gamma, RoundTripOnR) {
  for (auto [s, t] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}, std::pair{0, 4}}) {
    auto r = build_R(s, t);
    auto g = gamma_expand(r);
    EXPECT_EQ(gamma_recombine(g, r.nvars()), r);
  }
}

}  // namespace
}  // namespace vsasm
