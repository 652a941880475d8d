#include <gtest/gtest.h>

#include "vsasm/alpha.hpp"
#include "vsasm/genfun.hpp"
#include "vsasm/mt.hpp"
#include "vsasm/symmetrize.hpp"

namespace vsasm {
namespace {

TEST(BuildQ, SmallCases) {
  std::vector<long long> k{0, 2};
  auto q = build_Q(2, k);
  auto c = last_variable_coefficients(q.Q);
  // By hand: ASym(z2^2 (1 + z1 z2 + (X-2) z1)) / (z2 - z1) at z1 = 1.
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], XPoly(1));
  EXPECT_EQ(c[1], XPoly::x());
  EXPECT_EQ(c[2], XPoly(1));

  std::vector<long long> five{5};
  EXPECT_EQ(build_Q(1, five).Q, XLaurent::variable(1, 0, 5));
  EXPECT_THROW(build_Q(2, five), std::invalid_argument);
}

TEST(BuildQ, AllOnesMatchesTriangleCounts) {
  for (const auto& bottom : std::vector<std::vector<int>>{{0, 2, 4}, {1, 2, 3}, {0, 1, 3, 4}, {-1, 2, 3}}) {
    std::vector<long long> k(bottom.begin(), bottom.end());
    auto q = build_Q(static_cast<int>(k.size()), k);
    EXPECT_EQ(all_ones(q.Q), Rational(static_cast<long long>(count_mt(bottom))));
    EXPECT_EQ(all_ones(q.Q), alpha_eval(static_cast<int>(k.size()), k));
  }
}

TEST(PatternOperator, Examples) {
  std::vector<long long> four{4};
  auto c = check_prop_91(1, four, 2);
  EXPECT_TRUE(c.passed);
  EXPECT_EQ(c.detail, "6");
  std::vector<long long> k{0, 2};
  EXPECT_TRUE(check_prop_91(2, k, 0).passed);
  EXPECT_EQ(alpha_m_eval(2, 0, k).eval(Rational(1)), Rational(3));
  std::vector<long long> k3{1, 2, 3};
  for (int m = 0; m <= 3; ++m) EXPECT_TRUE(check_prop_91(3, k3, m).passed) << m;
  std::vector<long long> k4{0, 1, 3, 6};
  for (int m = 0; m <= 2; ++m) EXPECT_TRUE(check_prop_91(4, k4, m).passed) << m;
}

TEST(TopCoefficient, AgreesWithPatternCounts) {
  std::vector<int> two{0, 2};
  auto c = check_cor_92(two, 1);
  EXPECT_TRUE(c.passed);
  EXPECT_EQ(pattern_genfun(two, 1), XPoly::x());

  std::vector<int> b{0, 2, 4};
  for (int t = 0; t <= 4; ++t) EXPECT_TRUE(check_cor_92(b, t).passed) << t;
  std::vector<int> b4{1, 2, 4, 7};
  for (int t = 1; t <= 7; ++t) EXPECT_TRUE(check_cor_92(b4, t).passed) << t;

  std::vector<long long> k{1, 2, 3};
  Rational total;
  for (const auto& [t, x] : last_variable_coefficients(build_Q(3, k).Q)) total += x.eval(Rational(1));
  EXPECT_EQ(total, Rational(7));
}

TEST(RecursiveGenfun, TotalsAndAgreement) {
  const long long asm_totals[] = {1, 2, 7, 42, 429};
  const long long vsasm_totals[] = {1, 3, 26, 646};
  for (int n = 1; n <= 5; ++n) {
    auto r = build_recursive_genfun(GenfunKind::kASM, n);
    EXPECT_TRUE(r.agreement.passed) << n << r.agreement.witness;
    EXPECT_EQ(all_ones(r.value), Rational(asm_totals[n - 1]));
  }
  for (int n = 1; n <= 4; ++n) {
    auto r = build_recursive_genfun(GenfunKind::kVSASM, n);
    EXPECT_TRUE(r.agreement.passed) << n << r.agreement.witness;
    EXPECT_EQ(all_ones(r.value), Rational(vsasm_totals[n - 1]));
  }
  // X = 0 counts permutation matrices (no -1 entries).
  EXPECT_EQ(all_ones(build_recursive_genfun(GenfunKind::kASM, 4).value, Rational(0)), Rational(24));
}

TEST(TFamily, ClaimsOnSmallCases) {
  for (int n = 2; n <= 4; ++n) {
    auto special = t_family_report({Rational(1), Rational(0), Rational(0), Rational(0)}, n);
    EXPECT_TRUE(special.closed_form.passed) << n;
    EXPECT_TRUE(special.inversion.passed) << n;
    auto a0 = t_family_report({Rational(0), Rational(1), Rational(1), Rational(1)}, n);
    EXPECT_TRUE(a0.a_zero.passed) << n;
    EXPECT_TRUE(a0.sym.is_constant());
    EXPECT_TRUE(t_family_check({Rational(1), Rational(1), Rational(1), Rational(0)}, n).passed) << n;
    EXPECT_TRUE(t_family_check({Rational(2), Rational(-1), Rational(3, 2), Rational(5)}, n).passed) << n;
  }
  EXPECT_THROW(t_family_sym({}, 1), std::invalid_argument);
}

TEST(TFamily, InversionCheckIsNotVacuous) {
  // A numerator without the y <-> 1/x symmetry: (x + y)/(1 - x/y).
  Polynomial skew = sym_over_vandermonde(OverVandermonde<Rational>{parse_polynomial("z1*z2+z2^2", 2)});
  EXPECT_FALSE(check_inversion_invariance(skew, InversionMode::kEachVariable).passed);
}

TEST(TopSymmetryAndS0, SmallCases) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(check_top_symmetry(n).passed) << n;
  for (int n = 2; n <= 4; ++n) EXPECT_TRUE(check_s0_relation(n).passed) << n;
}

TEST(QTable, RowsAreSortedAndSumToTotal) {
  std::vector<long long> k{0, 2, 4};
  auto rows = q_table(3, k);
  Rational total;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    total += std::get<2>(rows[i]);
    if (i > 0) EXPECT_LT(std::make_pair(std::get<0>(rows[i - 1]), std::get<1>(rows[i - 1])),
                         std::make_pair(std::get<0>(rows[i]), std::get<1>(rows[i])));
  }
  EXPECT_EQ(total, Rational(26));
}

}  // namespace
}  // namespace vsasm
