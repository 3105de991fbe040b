#include <gtest/gtest.h>

#include <random>

#include "taftinv/taft.hpp"

using namespace taftinv;

namespace {

std::vector<ActionSpec> specs_up_to(int n_max) {
  std::vector<ActionSpec> out;
  for (int n = 2; n <= n_max; ++n)
    for (int k = 0; k < n; ++k)
      for (auto c : {SqrtChoice::Principal, SqrtChoice::Alternate}) out.push_back(make_spec(n, k, Family::Case1, c));
  return out;
}

}  // namespace

TEST(TaftAction, UAndZAreInvariant) {
  for (const auto& s : specs_up_to(6)) {
    EXPECT_TRUE(act_x(s, PBWElement::monomial(1, 0, 0)).is_zero());
    EXPECT_TRUE(act_x(s, PBWElement::monomial(0, 1, 0)).is_zero());
    EXPECT_EQ(act_x(s, PBWElement::monomial(0, 0, 1)), PBWElement::monomial(1, 0, 0));
  }
}

TEST(TaftAction, VToTheNIsInvariantInTheOrderNRegime) {
  for (const auto& s : specs_up_to(9)) {
    const bool inv = act_x(s, PBWElement::monomial(0, 0, s.n)).is_zero();
    if (s.order_n()) EXPECT_TRUE(inv) << s.describe();
  }
}

TEST(TaftAction, XOnVSquared) {
  // x.v^2 = g(v) x(v) + x(v) v = w^k vu + uv = (1 + w^-1) uv + z for k = 0
  const ActionSpec s = make_spec(3, 0, Family::Case1, SqrtChoice::Alternate);
  const PBWElement want = PBWElement::monomial(1, 0, 1, CycNum(1L) + s.omega_pow(-1)) + PBWElement::monomial(0, 1, 0);
  EXPECT_EQ(act_x(s, PBWElement::monomial(0, 0, 2)), want);
}

TEST(TaftAction, ClosedFormMatchesSkewDerivation) {
  std::mt19937 rng(2);
  for (const auto& s : specs_up_to(5)) {
    const DownUp alg(s);
    const TaftAction act(alg);
    for (int d = 0; d <= 7; ++d)
      for (const auto& m : graded_basis(d))
        if (rng() % 3 == 0) EXPECT_EQ(act.act_x(m), act.act_x_recursive(PBWElement::monomial(m))) << s.describe();
  }
}

TEST(TaftAction, ActsAsSkewDerivationOnProducts) {
  // x(ab) = (g a)(x b) + (x a) b
  std::mt19937 rng(9);
  for (const auto& s : specs_up_to(4)) {
    const DownUp alg(s);
    const TaftAction act(alg);
    for (int trial = 0; trial < 8; ++trial) {
      const auto b1 = graded_basis(1 + static_cast<int>(rng() % 4));
      const auto b2 = graded_basis(1 + static_cast<int>(rng() % 4));
      const PBWElement a = PBWElement::monomial(b1[rng() % b1.size()]);
      const PBWElement b = PBWElement::monomial(b2[rng() % b2.size()]);
      EXPECT_EQ(act.act_x(alg.mul(a, b)), alg.mul(act.act_g(a), act.act_x(b)) + alg.mul(act.act_x(a), b));
      EXPECT_EQ(act.act_g(alg.mul(a, b)), alg.mul(act.act_g(a), act.act_g(b)));
    }
  }
}

TEST(TaftAction, OperatorMatricesSatisfyTaftRelations) {
  for (const auto& s : specs_up_to(6)) {
    const DownUp alg(s);
    const TaftAction act(alg);
    for (int d = 0; d <= 10; d += (s.n > 4 ? 2 : 1)) {
      const GradedOperator g = act.operator_matrix(Letter::G, d);
      const GradedOperator x = act.operator_matrix(Letter::X, d);
      ASSERT_EQ(g.matrix.rows(), graded_basis(d).size());
      EXPECT_TRUE(g.matrix.is_diagonal());
      EXPECT_EQ(g.matrix * x.matrix, s.omega * (x.matrix * g.matrix)) << s.describe() << " d=" << d;
      EXPECT_TRUE(g.matrix.pow(static_cast<unsigned>(s.n)) == Matrix::identity(g.matrix.rows()));
    }
  }
}

TEST(TaftAction, XIsNilpotentOfOrderN) {
  for (const auto& s : specs_up_to(6)) {
    const DownUp alg(s);
    const TaftAction act(alg);
    bool some_nonzero = false;
    for (int d = 0; d <= 2 * s.n; ++d)
      for (const auto& m : graded_basis(d)) {
        EXPECT_TRUE(act.iterated_x(s.n, PBWElement::monomial(m)).is_zero());
        some_nonzero = some_nonzero || !act.iterated_x(s.n - 1, PBWElement::monomial(m)).is_zero();
      }
    EXPECT_TRUE(some_nonzero) << s.describe();
  }
}

TEST(TaftAction, BlocksAgreeWithTheFullMatrix) {
  const ActionSpec s = make_spec(4, 3, Family::Case1, SqrtChoice::Alternate);
  const DownUp alg(s);
  const TaftAction act(alg);
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5; ++q) {
      const Matrix M = act.x_block(p, q);
      const auto src = bidegree_basis(p, q);
      const auto dst = bidegree_basis(p + 1, q - 1);
      for (std::size_t c = 0; c < src.size(); ++c) {
        PBWElement img;
        for (std::size_t r = 0; r < dst.size(); ++r) img.add(dst[r], M(r, c));
        EXPECT_EQ(img, act.act_x(src[c]));
      }
    }
}

TEST(TaftAction, GEigenvalues) {
  const ActionSpec s = make_spec(5, 2, Family::Case1, SqrtChoice::Principal);
  const DownUp alg(s);
  const TaftAction act(alg);
  EXPECT_EQ(act.g_exponent({1, 0, 0}), 3);
  EXPECT_EQ(act.g_exponent({0, 1, 0}), 0);
  EXPECT_EQ(act.g_exponent({0, 0, 1}), 2);
  EXPECT_EQ(act.g_eigenvalue({2, 1, 1}), s.omega_pow(8));
}

TEST(TaftAction, LambdaAndMuAtRootsOfUnity) {
  for (const auto& s : specs_up_to(6)) {
    const DownUp alg(s);
    const TaftAction act(alg);
    EXPECT_TRUE(act.lambda(s.n).is_zero());
    EXPECT_FALSE(act.lambda(s.n - 1).is_zero());
    EXPECT_TRUE(act.mu(0).is_zero());
    EXPECT_TRUE(act.mu(1).is_zero());
    EXPECT_EQ(act.mu(2), s.omega_pow(s.k));
    if (s.order_n()) EXPECT_TRUE(act.mu(s.n).is_zero());
  }
}
