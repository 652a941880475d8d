#include <gtest/gtest.h>

#include <random>

#include "random_poly.hpp"
#include "vsasm/opwords.hpp"

namespace vsasm {
namespace {

using L = WordLetter;

Polynomial P(std::string_view text, int n) { return parse_polynomial(text, n); }

TEST(OperatorWord, ParseCountsAndPrefixes) {
  auto w = parse_word("PT, PS,QT,PT,QS,QT");
  EXPECT_EQ(w.size(), 6);
  EXPECT_EQ(w.s_count(), 2);
  EXPECT_EQ(w.t_count(), 4);
  EXPECT_TRUE(w.prefix_dyck());
  EXPECT_EQ(w.to_string(), "PT,PS,QT,PT,QS,QT");
  EXPECT_EQ(parse_word("").size(), 0);
  EXPECT_EQ(parse_word("").to_string(), "()");
  EXPECT_EQ(parse_word("PT,PS,PS").first_invalid_prefix(), 3);
  EXPECT_EQ(parse_word("QS").first_invalid_prefix(), 1);
  EXPECT_THROW(parse_word("PT,XX"), std::invalid_argument);
  EXPECT_THROW(parse_word("PT,,PS"), std::invalid_argument);
  EXPECT_THROW(parse_word("PT,"), std::invalid_argument);
}

TEST(OperatorWord, ValidWordCounts) {
  // Dyck prefixes of length k times 2^k labels.
  EXPECT_EQ(valid_words(0).size(), 1u);
  EXPECT_EQ(valid_words(1).size(), 2u);
  EXPECT_EQ(valid_words(2).size(), 8u);
  EXPECT_EQ(valid_words(3).size(), 24u);
  EXPECT_EQ(valid_words(4).size(), 96u);
  for (const auto& w : valid_words(4)) EXPECT_TRUE(w.prefix_dyck());
}

TEST(BuildF, SmallWords) {
  EXPECT_EQ(build_F(OperatorWord{}).numerator, Polynomial::one(1));
  EXPECT_EQ(build_F(OperatorWord{}).nvars(), 1);
  Polynomial pt = build_F(parse_word("PT")).numerator;
  // z1^-1 (1 - z2^-1)(1 - z1 + z1 z2)
  EXPECT_EQ(pt, P("z1^-1-1+z2-z1^-1*z2^-1+z2^-1-1", 2));
  EXPECT_EQ(pt, build_P(1, 2).numerator);
}

TEST(BuildF, WorkedExamplePrefix) {
  // QS_{3,4} PT_{2,4} QT_{2,3} PS_{2,2} PT_{1,2} [1]
  Polynomial f = Polynomial::one(1);
  f = apply_letter(L::PT, 1, 2, f);
  f = apply_letter(L::PS, 2, 2, f);
  f = apply_letter(L::QT, 2, 3, f);
  f = apply_letter(L::PT, 2, 4, f);
  f = apply_letter(L::QS, 3, 4, f);
  EXPECT_EQ(build_F(parse_word("PT,PS,QT,PT,QS")).numerator, f);
}

TEST(BuildF, PureWordsAreP) {
  for (const auto& text : {"PT,PS", "PT,PT,PS", "PT,PS,PT", "PT,PT"}) {
    auto w = parse_word(text);
    EXPECT_EQ(build_F(w).numerator, build_P(w.s_count() + 1, w.t_count() + 1).numerator) << text;
  }
}

TEST(BuildF, PureWordsAreQ) {
  // Q_{s,t}(z) = P_{s,t}(z_n^{-1}, ..., z_1^{-1}); its numerator picks up
  // prod z_k^{n-1} from the inverted Vandermonde.
  for (const auto& text : {"QT", "QT,QS", "QT,QT,QS", "QT,QS,QT"}) {
    auto w = parse_word(text);
    Polynomial p = build_P(w.s_count() + 1, w.t_count() + 1).numerator;
    const int n = p.nvars();
    std::vector<VarTarget> rev;
    for (int k = 0; k < n; ++k) rev.push_back(VarTarget::to_slot(n - 1 - k));
    ExponentVector mono;
    for (int k = 0; k < n; ++k) mono.set(k, n - 1);
    Polynomial q = invert_all_vars(remap(p, n, std::span<const VarTarget>(rev))).shifted(mono);
    EXPECT_EQ(build_F(w).numerator, q) << text;
  }
}

TEST(SymOfWord, MatchesPairwiseDivision) {
  for (int len = 0; len <= 3; ++len) {
    for (const auto& w : valid_words(len)) {
      auto f = build_F(w);
      EXPECT_EQ(sym_of_word(w), sym_over_vandermonde_by_division(f)) << w.to_string();
    }
  }
  // Invalid words still give Laurent polynomials.
  auto bad = parse_word("PS,PS");
  EXPECT_EQ(sym_of_word(bad), sym_over_vandermonde_by_division(build_F(bad)));
}

TEST(SymOfWord, PureWordsGiveR) {
  EXPECT_EQ(sym_of_word(OperatorWord{}), Polynomial::one(1));
  EXPECT_EQ(sym_of_word(parse_word("PT,PS")), build_R(2, 2));
  EXPECT_EQ(sym_of_word(parse_word("QT,QS")), invert_all_vars(build_R(2, 2)));
}

TEST(WordPair, Examples) {
  EXPECT_TRUE(check_word_pair(parse_word("PT,PS,QT,PT,QS,QT"), parse_word("PT,PS,PT,QT,QT,QS")).passed);
  EXPECT_TRUE(check_word_pair(parse_word("PT,PS"), parse_word("QT,QS")).passed);
  EXPECT_TRUE(check_word_pair(parse_word("PT,QT,PS"), parse_word("QT,QT,QS")).passed);
}

TEST(WordPair, Preconditions) {
  try {
    check_word_pair(parse_word("PT,PS,PS"), parse_word("PT,PS,PT"));
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("PT,PS,PS"), std::string::npos);
  }
  EXPECT_THROW(check_word_pair(parse_word("PT"), parse_word("PT,PT")), std::invalid_argument);
}

TEST(Commutations, Clauses) {
  for (int s = 1; s <= 3; ++s) {
    for (int t = 1; t <= 3; ++t) {
      for (std::uint64_t seed : {1u, 2u}) {
        auto c = check_commutations(s, t, seed);
        EXPECT_TRUE(c.passed) << s << "," << t << ": " << c.witness;
      }
    }
  }
  EXPECT_NE(check_commutations(1, 1).detail.find("vacuous"), std::string::npos);
  EXPECT_THROW(check_commutations(0, 2), std::invalid_argument);
}

TEST(Commutations, WrongIndicesDoNotCommute) {
  std::mt19937_64 rng(4);
  Polynomial f = testing::random_poly(rng, 1, 3, -1, 1);
  Polynomial a = apply_letter(L::PS, 2, 2, apply_letter(L::PT, 1, 2, f));
  Polynomial b = apply_letter(L::PT, 2, 2, apply_letter(L::PS, 1, 2, f));
  EXPECT_NE(a, b);
  Polynomial c = apply_letter(L::PS, 2, 2, apply_letter(L::QT, 1, 2, f));
  Polynomial d = apply_letter(L::QT, 2, 2, apply_letter(L::PS, 2, 1, f));
  EXPECT_NE(c, d);
}

TEST(SymRecursion, Examples) {
  EXPECT_TRUE(check_sym_recursion(1, 2, Polynomial::one(1)).passed);
  EXPECT_TRUE(check_sym_recursion(1, 2, P("z1", 1)).passed);
  for (int s = 0; s <= 3; ++s) {
    for (int t = 0; t <= 3; ++t) {
      if (s + t < 3) continue;
      auto c = check_sym_recursion(s, t, 11);
      EXPECT_TRUE(c.passed) << s << "," << t << ": " << c.witness;
    }
  }
  EXPECT_THROW(check_sym_recursion(1, 1, Polynomial::one(0)), std::invalid_argument);
}

TEST(LetterKernel, MovesWithTheDistinguishedSlot) {
  Polynomial g0 = letter_kernel(L::PS, 2, 2, 3, 0);
  Polynomial g1 = letter_kernel(L::PS, 2, 2, 3, 1);
  EXPECT_NE(g0, g1);
  EXPECT_EQ(g1, remap(g0, 3, std::vector<VarTarget>{VarTarget::to_slot(1), VarTarget::to_slot(0), VarTarget::to_slot(2)}));
}

TEST(WordSweep, UpToLengthFour) {
  auto r = sweep_words(4);
  EXPECT_EQ(r.words, 1 + 2 + 8 + 24 + 96);
  EXPECT_TRUE(r.pure_words.passed) << r.pure_words.witness;
  EXPECT_TRUE(r.endpoint_invariance.passed) << r.endpoint_invariance.detail;
  EXPECT_TRUE(r.last_letter_invariance.passed) << r.last_letter_invariance.detail;
}

}  // namespace
}  // namespace vsasm
