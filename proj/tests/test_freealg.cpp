#include <gtest/gtest.h>

#include "taftinv/freealg.hpp"

using namespace taftinv;

namespace {

Mat2 swap_conjugate(const Mat2& m) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = m[1 - i][1 - j];
  return r;
}

}  // namespace

TEST(FreeAlgebra, ProductsConcatenateWords) {
  const FreeElement a = FreeElement::word("u") + FreeElement::word("v", CycNum(2L));
  const FreeElement sq = a * a;
  EXPECT_EQ(sq.coeff("uu"), CycNum(1L));
  EXPECT_EQ(sq.coeff("uv"), CycNum(2L));
  EXPECT_EQ(sq.coeff("vu"), CycNum(2L));
  EXPECT_EQ(sq.coeff("vv"), CycNum(4L));
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Classification, CountsAndOrdering) {
  for (int n = 2; n <= 9; ++n) {
    const auto specs = classify_actions(n);
    ASSERT_EQ(specs.size(), static_cast<std::size_t>(4 * n));
    EXPECT_EQ(specs.front().family, Family::Case1);
    EXPECT_EQ(specs.back().family, Family::Case2);
    EXPECT_EQ(specs[0].sqrt_choice, SqrtChoice::Principal);
    EXPECT_EQ(specs[1].sqrt_choice, SqrtChoice::Alternate);
  }
}

TEST(Classification, EveryClassifiedActionIsValid) {
  for (int n = 2; n <= 8; ++n)
    for (const auto& s : classify_actions(n)) {
      const auto v = is_valid_action(to_taft_pair(s), s.alpha, s.beta);
      EXPECT_TRUE(v.valid) << s.describe() << " " << v.failed;
      EXPECT_FALSE(s.beta.is_zero());
    }
}

TEST(Classification, SqrtOrderRegimes) {
  // principal sqrt(omega) = zeta_2n always has order 2n; the alternate one
  // zeta_2n^(n+1) has order n exactly when n is odd
  for (int n = 2; n <= 12; ++n) {
    EXPECT_EQ(make_spec(n, 0, Family::Case1, SqrtChoice::Principal).sqrt_order, 2 * n);
    EXPECT_EQ(make_spec(n, 0, Family::Case1, SqrtChoice::Alternate).sqrt_order, n % 2 ? n : 2 * n);
  }
}

TEST(Classification, ExcludedParameterPairs) {
  for (int n = 2; n <= 12; ++n)
    for (const auto& s : classify_actions(n)) {
      EXPECT_FALSE(s.alpha == CycNum(0L) && s.beta == CycNum(1L)) << s.describe();
      EXPECT_FALSE(s.alpha == CycNum(2L) && s.beta == CycNum(-1L)) << s.describe();
    }
}

TEST(Classification, CheckOrderReportsFirstFailure) {
  const ActionSpec s = make_spec(3, 1, Family::Case1, SqrtChoice::Principal);
  TaftPair p = to_taft_pair(s);
  p.xmat[0][0] = CycNum(1L);
  EXPECT_EQ(is_valid_action(p, s.alpha, s.beta).failed, "x_square");
  p = to_taft_pair(s);
  p.gmat[0][0] = CycNum(1L);
  EXPECT_FALSE(is_valid_action(p, s.alpha, s.beta).valid);
  p = to_taft_pair(s);
  EXPECT_EQ(is_valid_action(p, s.alpha + CycNum(1L), s.beta).failed, "relation_preservation");
  EXPECT_THROW(is_valid_action(p, s.alpha, CycNum()), std::invalid_argument);
}

TEST(Classification, ScalingXStaysValid) {
  const ActionSpec s = make_spec(4, 2, Family::Case1, SqrtChoice::Alternate, CycNum(Rational(5, 3)));
  EXPECT_TRUE(is_valid_action(to_taft_pair(s), s.alpha, s.beta).valid);
  EXPECT_THROW(make_spec(4, 2, Family::Case1, SqrtChoice::Principal, CycNum()), std::invalid_argument);
}

TEST(Classification, RejectsBadParameters) {
  EXPECT_THROW(make_spec(1, 0, Family::Case1, SqrtChoice::Principal), std::invalid_argument);
  EXPECT_THROW(make_spec(3, 3, Family::Case1, SqrtChoice::Principal), std::invalid_argument);
  EXPECT_THROW(make_spec(4, 0, Family::Case1, SqrtChoice::Principal, CycNum(1L), 2), std::invalid_argument);
}

TEST(Classification, RoundTripThroughCharacteristicRoots) {
  for (int n = 2; n <= 10; ++n)
    for (const auto& s : classify_actions(n)) {
      const auto [t1, t2] = characteristic_roots(s);
      // t1 + t2 = alpha, t1 t2 = -beta
      EXPECT_EQ(t1.embed(2 * n) + t2.embed(2 * n), s.alpha);
      EXPECT_EQ(t1.embed(2 * n) * t2.embed(2 * n), -s.beta);
      bool found = false;
      for (const auto& b : actions_for_downup(t1, t2))
        found = found || (b.family == s.family && b.k == s.k && b.omega == s.omega && b.sqrt_omega == s.sqrt_omega);
      EXPECT_TRUE(found) << s.describe();
    }
}

TEST(Classification, EqualRootsGiveNoActions) {
  const RootOfUnity g(1, 6);
  EXPECT_TRUE(actions_for_downup(g, g).empty());
}

TEST(Normalization, SwapConjugationGivesCaseOne) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& s : classify_actions(n)) {
      if (s.family != Family::Case2) continue;
      const ActionSpec t = normalize_to_case1(s);
      EXPECT_EQ(t.family, Family::Case1);
      const TaftPair p = to_taft_pair(s);
      TaftPair swapped = p;
      swapped.gmat = swap_conjugate(p.gmat);
      swapped.xmat = swap_conjugate(p.xmat);
      // the swap turns A(alpha, beta) into A(-alpha/beta, 1/beta)
      const CycNum a2 = -s.alpha / s.beta;
      const CycNum b2 = s.beta.inverse();
      EXPECT_TRUE(is_valid_action(swapped, a2, b2).valid) << s.describe();
      EXPECT_EQ(swapped.gmat, to_taft_pair(t).gmat) << s.describe();
      EXPECT_EQ(swapped.xmat, to_taft_pair(t).xmat) << s.describe();
      EXPECT_EQ(a2, t.alpha) << s.describe();
      EXPECT_EQ(b2, t.beta) << s.describe();
    }
}

TEST(Superpotential, EigenvalueAndAnnihilation) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& s : classify_actions(n)) {
      if (s.family != Family::Case1) continue;
      const auto r = superpotential_check(s);
      EXPECT_TRUE(r.x_annihilates) << s.describe();
      EXPECT_EQ(r.g_eigenvalue, s.omega_pow(4 * s.k + 2)) << s.describe();
    }
}

TEST(Superpotential, TrivialExactlyWhenCongruent) {
  for (int n = 2; n <= 9; ++n)
    for (int k = 0; k < n; ++k) {
      const auto r = superpotential_check(make_spec(n, k, Family::Case1, SqrtChoice::Principal));
      EXPECT_EQ(r.g_eigenvalue.is_one(), (4 * k + 2) % n == 0) << n << " " << k;
    }
  EXPECT_TRUE(superpotential_check(make_spec(2, 1, Family::Case1, SqrtChoice::Principal)).g_eigenvalue.is_one());
}

TEST(SqrtChoice, ParsesNames) {
  EXPECT_EQ(parse_sqrt_choice("principal"), SqrtChoice::Principal);
  EXPECT_EQ(parse_sqrt_choice("alt"), SqrtChoice::Alternate);
  EXPECT_EQ(parse_sqrt_choice("alternate"), SqrtChoice::Alternate);
  EXPECT_FALSE(parse_sqrt_choice("other").has_value());
  EXPECT_EQ(to_string(SqrtChoice::Alternate), "alt");
}
