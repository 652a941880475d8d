#include <gtest/gtest.h>

#include <random>

#include "random_poly.hpp"
#include "vsasm/binomial.hpp"
#include "vsasm/division.hpp"
#include "vsasm/permutation.hpp"

namespace vsasm {
namespace {

Polynomial P(std::string_view text, int n) { return parse_polynomial(text, n); }
Polynomial z(int n, int i, int k = 1) { return Polynomial::variable(n, i - 1, k); }

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, PromotesToBigOnOverflow) {
  Rational big(std::numeric_limits<long long>::max());
  Rational sum = big + big;
  EXPECT_FALSE(sum.is_small());
  EXPECT_EQ(sum - big, big);
  EXPECT_TRUE((sum - big).is_small());
  Rational q = Rational(1, 3) * Rational(3);
  EXPECT_TRUE(q.is_one());
}

TEST(XPoly, ArithmeticAndRendering) {
  XPoly x = XPoly::x();
  XPoly p = x * x - XPoly(2) * x + XPoly(1);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.eval(Rational(1)), Rational(0));
  EXPECT_EQ((p - p).degree(), XPoly::kZeroDegree);
  EXPECT_EQ(x.to_string(), "X");
}

TEST(Laurent, MultiplicationExamples) {
  EXPECT_EQ(z(2, 1) * z(2, 2), P("z1*z2", 2));
  EXPECT_EQ((z(2, 1) - z(2, 2)) * (z(2, 1) + z(2, 2)), P("z1^2-z2^2", 2));
  EXPECT_EQ((Polynomial::one(1) - z(1, 1, -1)) * z(1, 1), P("z1-1", 1));
  EXPECT_THROW(z(2, 1) * z(3, 1), VariableCountMismatch);
}

TEST(Laurent, InvertVarsExamples) {
  std::vector<int> first{0};
  std::vector<int> both{0, 1};
  EXPECT_EQ(invert_vars(P("z1^2*z2^-1", 2), std::span<const int>(first)), P("z1^-2*z2^-1", 2));
  EXPECT_EQ(invert_vars(P("z1+z1^-1", 1), std::span<const int>(first)), P("z1+z1^-1", 1));
  EXPECT_EQ(invert_vars(P("1-z1+z1*z2", 2), std::span<const int>(both)), P("1-z1^-1+z1^-1*z2^-1", 2));
  std::vector<int> bad{2};
  EXPECT_THROW(invert_vars(z(2, 1), std::span<const int>(bad)), std::out_of_range);
}

TEST(Laurent, PermuteExamples) {
  auto swap = Permutation::transposition(2, 0, 1);
  EXPECT_EQ(permute(P("z1*z2^2", 2), swap), P("z1^2*z2", 2));
  EXPECT_EQ(permute(P("z1*z2", 2), swap), P("z1*z2", 2));
  EXPECT_EQ(permute(z(1, 1), Permutation::identity(1)), z(1, 1));
  EXPECT_THROW(Permutation({0, 0}), std::invalid_argument);
}

TEST(Laurent, EvalExamples) {
  EXPECT_EQ(eval(P("z1+z1^-1", 1), {Rational(2)}), Rational(5, 2));
  EXPECT_EQ(eval(P("z2-z1", 2), {Rational(1), Rational(1)}), Rational(0));
  EXPECT_THROW(eval(P("z1^-1", 1), {Rational(0)}), std::domain_error);
}

TEST(Laurent, RenderingRoundTrip) {
  Polynomial p = P("3/2*z1^-2*z2-z1+7", 2);
  EXPECT_EQ(to_string(p), "3/2*z1^-2*z2+7-z1");
  EXPECT_EQ(parse_polynomial(to_string(p), 2), p);
  EXPECT_EQ(to_string(Polynomial(3)), "0");
}

TEST(Division, Examples) {
  EXPECT_EQ(exact_div(P("z2^2-z1^2", 2), P("z2-z1", 2)), P("z1+z2", 2));
  EXPECT_EQ(exact_div(Polynomial(2), P("z2-z1", 2)), Polynomial(2));
  EXPECT_THROW(exact_div(P("z1*z2", 2), P("z2-z1", 2)), NotDivisibleError);
  EXPECT_THROW(exact_div(P("z1", 2), Polynomial(2)), std::domain_error);
}

TEST(Division, Vandermonde) {
  EXPECT_EQ(vandermonde(1), Polynomial::one(1));
  EXPECT_EQ(vandermonde(2), P("z2-z1", 2));
  Polynomial v3 = vandermonde(3);
  EXPECT_EQ(v3.size(), 6u);
  EXPECT_EQ(v3, (z(3, 2) - z(3, 1)) * (z(3, 3) - z(3, 1)) * (z(3, 3) - z(3, 2)));
}

TEST(Division, NotDivisibleCarriesWitness) {
  try {
    divide_by_difference(P("z1*z2+z1", 2), 0, 1);
    FAIL();
  } catch (const NotDivisibleError& e) {
    EXPECT_FALSE(e.witness().empty());
  }
}

class RingProperties : public ::testing::TestWithParam<int> {};

TEST_P(RingProperties, AxiomsAndExactDivision) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  const int n = 3;
  auto a = testing::random_poly(rng, n, 6, -2, 2);
  auto b = testing::random_poly(rng, n, 5, -2, 2);
  auto c = testing::random_poly(rng, n, 4, -2, 2);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ(a + (-a), Polynomial(n));
  if (!b.is_zero()) {
    EXPECT_EQ(exact_div(a * b, b), a);
  }
  EXPECT_EQ(exact_div(a * vandermonde(n), vandermonde(n)), a);
  std::vector<int> which{0, 2};
  EXPECT_EQ(invert_vars(invert_vars(a, std::span<const int>(which)), std::span<const int>(which)), a);

  std::vector<Rational> point{Rational(2), Rational(-3), Rational(1, 2)};
  std::span<const Rational> pt(point);
  EXPECT_EQ(eval(a * b, pt), eval(a, pt) * eval(b, pt));
  EXPECT_EQ(eval(a + b, pt), eval(a, pt) + eval(b, pt));

  Permutation s = Permutation::unrank(n, static_cast<std::uint64_t>(GetParam()) % 6);
  Permutation t = Permutation::unrank(n, static_cast<std::uint64_t>(GetParam() * 5) % 6);
  EXPECT_EQ(permute(permute(a, s), t), permute(a, t.compose(s)));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RingProperties, ::testing::Range(1, 21));

TEST(Division, XPolyCoefficients) {
  XLaurent num = to_xlaurent(P("z2^2-z1^2", 2)) * XLaurent::constant(2, XPoly::x());
  XLaurent q = exact_div(num, to_xlaurent(P("z2-z1", 2)));
  EXPECT_EQ(q, to_xlaurent(P("z1+z2", 2)) * XLaurent::constant(2, XPoly::x()));
}

TEST(Binomial, Extension) {
  EXPECT_EQ(binom(5, 2), Rational(10));
  EXPECT_EQ(binom(2, 5), Rational(0));
  EXPECT_EQ(binom(-1, 3), Rational(-1));
  EXPECT_EQ(binom(-3, 2), Rational(6));
  EXPECT_EQ(binom(Rational(1, 2), 2), Rational(-1, 8));
  EXPECT_EQ(binom(7, -1), Rational(0));
  EXPECT_EQ(binom(0, 0), Rational(1));
}

}  // namespace
}  // namespace vsasm
