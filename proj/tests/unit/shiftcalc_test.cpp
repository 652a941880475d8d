#include <gtest/gtest.h>

#include <random>

#include "random_poly.hpp"
#include "vsasm/shiftcalc.hpp"
#include "vsasm/symmetrize.hpp"

namespace vsasm {
namespace {

Polynomial P(std::string_view text, int n) { return parse_polynomial(text, n); }
Polynomial c(int n, long long v) { return Polynomial::constant(n, Rational(v)); }
Polynomial alpha2() { return P("z2-z1+1", 2); }

TEST(ExtSum, ThreeRegimes) {
  Polynomial x = P("z1", 1);
  EXPECT_EQ(ext_sum(x, 0, c(1, 1), c(1, 3)), c(1, 6));
  EXPECT_EQ(ext_sum(x, 0, c(1, 4), c(1, 3)), Polynomial(1));
  EXPECT_EQ(ext_sum(x, 0, c(1, 5), c(1, 3)), c(1, -4));
}

TEST(ExtSum, GluingAndDirectSums) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    // p in (x, y); sums run over x.
    Polynomial p = testing::random_poly(rng, 2, 5, 0, 3);
    for (int a = -3; a <= 3; ++a) {
      for (int b = -4; b <= 3; ++b) {
        for (int cc = -4; cc <= 3; ++cc) {
          Polynomial ab = ext_sum(p, 0, c(2, a), c(2, b));
          Polynomial bc = ext_sum(p, 0, c(2, b + 1), c(2, cc));
          EXPECT_EQ(ab + bc, ext_sum(p, 0, c(2, a), c(2, cc)));
        }
        if (b >= a - 1) {
          Polynomial direct(2);
          for (int v = a; v <= b; ++v) direct += substitute(p, 0, c(2, v));
          EXPECT_EQ(ext_sum(p, 0, c(2, a), c(2, b)), direct);
        }
      }
    }
  }
}

TEST(ExtSum, SymbolicBoundsAgreeWithIntegerBounds) {
  // p(x) summed from a (slot 1) to b (slot 2).
  Polynomial p = P("z1^3-2*z1+5", 3);
  Polynomial s = ext_sum(p, 0, P("z2", 3), P("z3", 3));
  for (int a = -2; a <= 2; ++a) {
    for (int b = -3; b <= 3; ++b) {
      Rational v = eval(s, {Rational(0), Rational(a), Rational(b)});
      EXPECT_EQ(Polynomial::constant(3, v), ext_sum(p, 0, c(3, a), c(3, b)));
    }
  }
}

TEST(Shift, Examples) {
  Polynomial x2 = P("z1^2", 1);
  EXPECT_EQ(apply_shift(x2, {OpKind::kDelta, 0, -1, 1, {}}), P("2*z1+1", 1));
  EXPECT_EQ(apply_shift(x2, {OpKind::kdelta, 0, -1, 1, {}}), P("2*z1-1", 1));
  EXPECT_EQ(apply_shift(P("z1", 1), {OpKind::kE, 0, -1, -1, {}}), P("z1-1", 1));
  EXPECT_THROW(apply_shift(x2, {OpKind::kDelta, 0, -1, -1, {}}), std::invalid_argument);
}

TEST(Inverse, Examples) {
  // p = 1 in x (slot 0) with constant z (slot 1).
  ConstantVector z{{P("z2", 2)}};
  EXPECT_EQ(apply_inverse(Polynomial::one(2), {OpKind::kInvDelta, 0, -1, -1, z}), P("z1-z2-1", 2));
  std::vector<long long> four{4};
  EXPECT_EQ(inverse_Delta(Polynomial::one(1), 0, make_constants(1, four)), P("z1-5", 1));
  EXPECT_EQ(inverse_delta(backward_difference(P("z1^2", 2), 0), 0, z), P("z1^2", 2) - P("z2-1", 2) * P("z2-1", 2));
  EXPECT_THROW(apply_inverse(Polynomial::one(2), {OpKind::kInvDelta, 0, -1, -2, z}), std::invalid_argument);
}

class RightInverse : public ::testing::TestWithParam<int> {};

TEST_P(RightInverse, Identities) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  // Slots: x, y, z1, z2.
  Polynomial p = testing::random_poly(rng, 2, 6, 0, 3).with_nvars(5);
  EXPECT_TRUE(check_right_inverse_identities(p, 0, 1, 2).passed);
  std::vector<int> one{2};
  std::vector<int> two{2, 3};
  std::vector<int> three{2, 3, 4};
  EXPECT_TRUE(check_delta_conversion(p, 0, one).passed);
  EXPECT_TRUE(check_delta_conversion(p, 0, two).passed);
  EXPECT_TRUE(check_delta_conversion(p, 0, three).passed);

  // Integer constants: ^zDelta^{-1} then Delta is the identity.
  std::uniform_int_distribution<int> zd(-5, 5);
  std::vector<long long> zs{zd(rng), zd(rng)};
  Polynomial q = p.with_nvars(2);
  auto cv = make_constants(2, zs);
  EXPECT_EQ(forward_difference(inverse_Delta(q, 0, cv), 0, 2), q);
  EXPECT_EQ(backward_difference(inverse_delta(q, 0, cv), 0, 2), q);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RightInverse, ::testing::Range(1, 11));

TEST(VW, Examples) {
  Polynomial one = Polynomial::one(2);
  EXPECT_EQ(apply_vw(one, {OpKind::kW, 0, 1, 1, {}}), one);
  Polynomial p = P("z1^2*z2", 2);
  Polynomial w = apply_vw(p, {OpKind::kW, 0, 1, 1, {}});
  EXPECT_EQ(apply_vw(w, {OpKind::kWinv, 0, 1, 1, {}}), p);
  EXPECT_EQ(apply_vw(apply_vw(p, {OpKind::kWinv, 0, 1, 1, {}}), {OpKind::kW, 0, 1, 1, {}}), p);
  EXPECT_EQ(apply_vw(p, {OpKind::kSwap, 0, 1, 1, {}}), P("z1*z2^2", 2));
  EXPECT_THROW(apply_vw(p, {OpKind::kW, 1, 1, 1, {}}), std::invalid_argument);
}

TEST(VW, WinvInvertsWOnRandomPolynomials) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    Polynomial p = testing::random_poly(rng, 3, 6, 0, 4);
    OperatorSpec w{OpKind::kW, 2, 0, 1, {}};
    OperatorSpec winv{OpKind::kWinv, 2, 0, 1, {}};
    EXPECT_EQ(apply_vw(apply_vw(p, w), winv), p);
    EXPECT_EQ(apply_vw(apply_vw(p, winv), w), p);
  }
}

TEST(ShiftAntisymmetry, Examples) {
  EXPECT_TRUE(verify_shift_antisymmetry(alpha2()).passed);
  EXPECT_FALSE(verify_shift_antisymmetry(P("z1", 2)).passed);
  EXPECT_TRUE(antisym_seed_to_a(Polynomial(2)).is_zero());
  EXPECT_EQ(antisym_seed_to_a(P("z2-z1", 2)), alpha2());
  EXPECT_THROW(antisym_seed_to_a(P("z1", 2)), std::invalid_argument);
}

TEST(ShiftAntisymmetry, SeedsAlwaysProduceAnnihilatedPolynomials) {
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 4; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      Polynomial b = asym(testing::random_poly(rng, n, 3, 0, n + 1));
      Polynomial a = antisym_seed_to_a(b);
      EXPECT_TRUE(verify_shift_antisymmetry(a).passed);
    }
  }
}

TEST(DiagonalOperatorIdentity, SmallCases) {
  EXPECT_TRUE(verify_conjecture_62(1, 1, Polynomial::one(1)).passed);
  EXPECT_TRUE(verify_conjecture_62(1, 2, alpha2()).passed);
  EXPECT_THROW(verify_conjecture_62(2, 1, alpha2()), std::invalid_argument);
  EXPECT_THROW(verify_conjecture_62(1, 2, P("z1", 2)), std::invalid_argument);
}

TEST(LaurentToOp, SampledInstances) {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 3; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      Polynomial h = testing::random_poly(rng, n, 3, -2, 2);
      Polynomial op = h + permute(h, Permutation::transposition(n, 0, 1));
      Polynomial a = asym(testing::random_poly(rng, n, 3, 0, 3));
      EXPECT_TRUE(verify_laurent_to_op(op, a).passed);
    }
  }
}

}  // namespace
}  // namespace vsasm
