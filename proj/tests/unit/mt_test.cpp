#include <gtest/gtest.h>

#include <random>

#include "vsasm/alpha.hpp"
#include "vsasm/mt.hpp"

namespace vsasm {
namespace {

std::vector<int> range_row(int n, int step, int first) {
  std::vector<int> r;
  for (int i = 0; i < n; ++i) r.push_back(first + step * i);
  return r;
}

std::uint64_t streamed_count(const std::vector<int>& bottom) {
  std::uint64_t c = 0;
  for_each_mt(bottom, [&](const MonotoneTriangle& t) {
    EXPECT_TRUE(t.valid());
    ++c;
    return true;
  });
  return c;
}

TEST(MonotoneTriangles, PaperAndAsmCounts) {
  std::vector<int> b{1, 2, 3};
  EXPECT_EQ(enumerate_mt(b), 7u);
  const std::uint64_t asm_numbers[] = {1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(count_mt(range_row(n, 1, 1)), asm_numbers[n - 1]);
}

TEST(MonotoneTriangles, ExplicitListingBottom24) {
  std::vector<int> b{2, 4};
  std::vector<std::vector<int>> tops;
  for_each_mt(b, [&](const MonotoneTriangle& t) {
    tops.push_back(t.rows[0]);
    return true;
  });
  EXPECT_EQ(tops, (std::vector<std::vector<int>>{{2}, {3}, {4}}));
  EXPECT_EQ(enumerate_mt(b, [](const MTStatistics& s) { return s.left_diag_eq_first == 2; }), 1u);
  EXPECT_EQ(enumerate_mt(b, [](const MTStatistics& s) { return s.left_diag_eq_first == 1; }), 2u);
}

TEST(MonotoneTriangles, DpAgreesWithStreaming) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> gap(1, 3);
  for (int rep = 0; rep < 20; ++rep) {
    int n = 1 + rep % 5;
    std::vector<int> b{gap(rng) - 2};
    for (int i = 1; i < n; ++i) b.push_back(b.back() + gap(rng));
    EXPECT_EQ(count_mt(b), streamed_count(b));
  }
}

TEST(MonotoneTriangles, VsasmCounts) {
  const std::uint64_t v[] = {1, 3, 26, 646, 45885, 9304650};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(count_mt(range_row(n, 2, 2)), v[n - 1]);
}

TEST(MonotoneTriangles, HistogramsMatchStreamedStatistics) {
  for (const auto& b : {std::vector<int>{1, 2, 3, 4}, std::vector<int>{2, 4, 6}, std::vector<int>{0, 3, 4, 6}}) {
    std::vector<std::uint64_t> left(b.size() + 1, 0);
    std::vector<std::uint64_t> right(b.size() + 1, 0);
    std::map<int, std::uint64_t> top;
    for_each_mt(b, [&](const MonotoneTriangle& t) {
      auto s = statistics(t);
      ++left[static_cast<std::size_t>(s.left_diag_eq_first)];
      ++right[static_cast<std::size_t>(s.right_diag_eq_last)];
      ++top[s.top_entry];
      return true;
    });
    EXPECT_EQ(left_diagonal_histogram(b), left);
    EXPECT_EQ(right_diagonal_histogram(b), right);
    EXPECT_EQ(top_entry_histogram(b), top);
  }
}

TEST(MonotoneTriangles, EarlyStopAndErrors) {
  int seen = 0;
  std::vector<int> b{1, 2, 3, 4};
  for_each_mt(b, [&](const MonotoneTriangle&) { return ++seen < 5; });
  EXPECT_EQ(seen, 5);
  std::vector<int> bad{1, 1};
  EXPECT_THROW(count_mt(bad), std::invalid_argument);
  EXPECT_THROW(enumerate_mt(std::vector<int>{3, 2}), std::invalid_argument);
}

TEST(PatternGenfun, SmallBottoms) {
  std::vector<int> b{0, 2};
  // 0 < 1 < 2 is one occurrence of the pattern.
  EXPECT_EQ(pattern_genfun(b, 1), XPoly::x());
  EXPECT_EQ(pattern_genfun(b, 0), XPoly(1));
  EXPECT_EQ(pattern_genfun(b, 2), XPoly(1));
  EXPECT_THROW(pattern_genfun(b, 3), std::invalid_argument);
  std::vector<int> c{1, 2, 3};
  Rational total(0);
  for (int t = 1; t <= 3; ++t) total += pattern_genfun(c, t).eval(Rational(1));
  EXPECT_EQ(total, Rational(7));
}

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha_eval(3, {1, 2, 3}), Rational(7));
  EXPECT_EQ(alpha_eval(2, {2, 4}), Rational(3));
  EXPECT_EQ(alpha_eval(2, {0, 2}), Rational(3));
  EXPECT_EQ(alpha_eval(1, {-5}), Rational(1));
  EXPECT_EQ(alpha_polynomial(2), parse_polynomial("z2-z1+1", 2));
}

TEST(Alpha, AgreesWithCountsOnIncreasingRows) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> gap(1, 3);
  for (int n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      std::vector<int> b{gap(rng)};
      for (int i = 1; i < n; ++i) b.push_back(b.back() + gap(rng));
      std::vector<long long> k(b.begin(), b.end());
      EXPECT_EQ(alpha_eval(n, k), Rational(static_cast<long long>(count_mt(b))));
    }
  }
  // Numeric recursion beyond the symbolic range.
  std::vector<long long> k7{1, 2, 3, 4, 5, 6, 7};
  EXPECT_EQ(alpha_eval(7, k7), Rational(218348));
}

TEST(Alpha, CyclicAndShiftIdentities) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_TRUE(check_alpha_cyclic(n).passed) << n;
    EXPECT_TRUE(check_alpha_shift(n).passed) << n;
  }
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> v(-6, 6);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<long long> k{v(rng), v(rng), v(rng), v(rng)};
    std::vector<long long> rot{k[1], k[2], k[3], k[0] - 4};
    EXPECT_EQ(alpha_eval(4, k), -alpha_eval(4, rot));
  }
}

TEST(AlphaPolyFirst, Examples) {
  std::vector<long long> t{4};
  Polynomial p = alpha_poly_first(2, t);
  EXPECT_EQ(p, parse_polynomial("5-z1", 1));
  EXPECT_EQ(alpha_poly_first(1, std::vector<long long>{}), Polynomial::one(1));
  std::vector<long long> t3{4, 6};
  Polynomial q = alpha_poly_first(3, t3);
  EXPECT_EQ(q.max_exponent(0), 2);
  for (long long k1 = 2; k1 <= 4; ++k1) EXPECT_EQ(eval(q, {Rational(k1)}), alpha_eval(3, {k1, 4, 6}));
}

TEST(AlphaM, Examples) {
  EXPECT_EQ(alpha_m_eval(1, 2, std::vector<long long>{4}), XPoly(6));
  EXPECT_EQ(alpha_m_eval(2, 0, std::vector<long long>{0, 2}).eval(Rational(1)), Rational(3));
  EXPECT_EQ(alpha_m_eval(3, 0, std::vector<long long>{1, 2, 3}).eval(Rational(1)), Rational(7));
}

TEST(AlphaM, GridInterpolationMatchesSummationOperator) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(alpha_by_grid_interpolation(n), alpha_polynomial(n)) << n;
}

TEST(AlphaChecks, RotatedDifferences) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> v(-6, 8);
  for (int seed = 0; seed < 3; ++seed) {
    for (int n = 1; n <= 4; ++n) {
      for (int d = 1; d <= 3; ++d) {
        for (int i = -2; i <= 2; ++i) {
          std::vector<long long> x;
          for (int r = 0; r < -i; ++r) x.push_back(v(rng));
          auto o = check_lemma_51(n, d, i, x);
          EXPECT_TRUE(o.passed) << o.witness;
        }
      }
    }
  }
}

TEST(AlphaChecks, InverseOperatorsByInsertedConstants) {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> v(-6, 8);
  for (int n = 1; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (int i = -2; i <= -1; ++i) {
        std::vector<long long> x;
        for (int r = 0; r < -i; ++r) x.push_back(v(rng));
        auto o = check_lemma_71(n, j, i, x);
        EXPECT_TRUE(o.passed) << o.witness;
      }
    }
  }
}

TEST(AlphaChecks, DiagonalStatistics) {
  for (const auto& b : {std::vector<int>{1, 2, 3}, std::vector<int>{2, 4, 6, 8}, std::vector<int>{0, 1, 5, 6, 9}}) {
    for (int i = 0; i <= 3; ++i) EXPECT_TRUE(check_diagonal_statistics(b, i).passed) << i;
  }
}

}  // namespace
}  // namespace vsasm
