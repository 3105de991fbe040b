#include <gtest/gtest.h>

#include <random>

#include "taftinv/downup.hpp"

using namespace taftinv;

namespace {

PBWElement random_element(std::mt19937& rng, const ActionSpec& s, int max_deg, int terms) {
  PBWElement e;
  for (int t = 0; t < terms; ++t) {
    const int d = static_cast<int>(rng() % (max_deg + 1));
    const auto basis = graded_basis(d);
    const CycNum c = CycNum(static_cast<long>(rng() % 5) - 2) + s.zeta_pow(static_cast<long long>(rng() % s.level()));
    e.add(basis[rng() % basis.size()], c);
  }
  return e;
}

std::string random_word(std::mt19937& rng, int len) {
  std::string w;
  for (int i = 0; i < len; ++i) w += "uvz"[rng() % 3];
  return w;
}

std::vector<ActionSpec> sample_specs() {
  std::vector<ActionSpec> out;
  for (int n : {2, 3, 4, 5})
    for (int k = 0; k < n; ++k)
      for (auto c : {SqrtChoice::Principal, SqrtChoice::Alternate}) out.push_back(make_spec(n, k, Family::Case1, c));
  return out;
}

}  // namespace

TEST(GradedBasis, SizesMatchHilbertSeriesOfA) {
  // hilb A = 1 / ((1-t)^2 (1-t^2)): dim A_d = floor((d+2)^2 / 4)
  for (int d = 0; d <= 30; ++d) EXPECT_EQ(graded_basis(d).size(), static_cast<std::size_t>((d + 2) * (d + 2) / 4)) << d;
  const auto b = graded_basis(2);
  EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
  EXPECT_EQ(b.front(), (Monomial{0, 0, 2}));
}

TEST(DownUp, DefiningRelationsVanish) {
  for (const auto& s : sample_specs()) {
    const DownUp alg(s);
    for (const auto& rel : downup_relations(s.alpha, s.beta)) EXPECT_TRUE(alg.from_free(rel).is_zero()) << s.describe();
  }
}

TEST(DownUp, ZIsNormal) {
  for (const auto& s : sample_specs()) {
    const DownUp alg(s);
    const PBWElement u = PBWElement::monomial(1, 0, 0);
    const PBWElement v = PBWElement::monomial(0, 0, 1);
    const PBWElement z = PBWElement::monomial(0, 1, 0);
    EXPECT_EQ(alg.mul(z, u), alg.eps() * alg.mul(u, z));
    EXPECT_EQ(alg.mul(v, z), alg.eps() * alg.mul(z, v));
    EXPECT_EQ(alg.mul(v, u) - alg.c() * alg.mul(u, v), z);
  }
}

TEST(DownUp, ProductAgreesWithLetterRewriting) {
  std::mt19937 rng(11);
  for (const auto& s : sample_specs()) {
    const DownUp alg(s);
    for (int trial = 0; trial < 6; ++trial) {
      const std::string a = random_word(rng, 1 + static_cast<int>(rng() % 5));
      const std::string b = random_word(rng, 1 + static_cast<int>(rng() % 5));
      EXPECT_EQ(alg.mul(alg.normal_form_word(a), alg.normal_form_word(b)), alg.normal_form_word(a + b))
          << s.describe() << " " << a << "|" << b;
    }
  }
}

TEST(DownUp, VPowerTimesUClosedForm) {
  for (const auto& s : sample_specs()) {
    const DownUp alg(s);
    for (int m = 0; m <= 4 * s.n; ++m) EXPECT_EQ(alg.v_power_times_u(m), alg.normal_form_word(std::string(m, 'v') + "u"));
  }
}

TEST(DownUp, Associativity) {
  std::mt19937 rng(3);
  for (const auto& s : sample_specs()) {
    const DownUp alg(s);
    for (int trial = 0; trial < 3; ++trial) {
      const auto a = random_element(rng, s, 4, 3);
      const auto b = random_element(rng, s, 4, 3);
      const auto c = random_element(rng, s, 4, 3);
      EXPECT_EQ(alg.mul(alg.mul(a, b), c), alg.mul(a, alg.mul(b, c))) << s.describe();
    }
  }
}

TEST(DownUp, ProductsRespectTheGrading) {
  std::mt19937 rng(5);
  const ActionSpec s = make_spec(4, 1, Family::Case1, SqrtChoice::Principal);
  const DownUp alg(s);
  for (int d1 = 0; d1 <= 5; ++d1)
    for (int d2 = 0; d2 <= 5; ++d2) {
      const auto& b1 = graded_basis(d1);
      const auto& b2 = graded_basis(d2);
      const PBWElement p = alg.mul(b1[rng() % b1.size()], b2[rng() % b2.size()]);
      EXPECT_TRUE(p.is_homogeneous());
      if (!p.is_zero()) EXPECT_EQ(p.max_degree(), d1 + d2);
    }
}

TEST(DownUp, CaseTwoIsRejected) {
  EXPECT_THROW(DownUp(make_spec(3, 0, Family::Case2, SqrtChoice::Principal)), std::invalid_argument);
}

TEST(Parser, ParsesExpressions) {
  const ActionSpec s = make_spec(3, 0, Family::Case1, SqrtChoice::Principal);
  const DownUp alg(s);
  EXPECT_EQ(parse_element("v*u", alg), alg.normal_form_word("vu"));
  EXPECT_EQ(parse_element("(u + v)^2", alg), alg.normal_form_word("uu") + alg.normal_form_word("uv") +
                                                 alg.normal_form_word("vu") + alg.normal_form_word("vv"));
  EXPECT_EQ(parse_element("w*u", alg), s.omega * PBWElement::monomial(1, 0, 0));
  EXPECT_EQ(parse_element("s^-1 * z / 2", alg), (s.sqrt_omega.inverse() * CycNum(Rational(1, 2))) * PBWElement::monomial(0, 1, 0));
  EXPECT_EQ(parse_element("r^6", alg), PBWElement(CycNum(1L)));
  EXPECT_EQ(parse_scalar("w^3", s), CycNum(1L));
}

TEST(Parser, RoundTripsPrintedElements) {
  std::mt19937 rng(19);
  for (const auto& s : sample_specs()) {
    const DownUp alg(s);
    const auto e = random_element(rng, s, 5, 4);
    EXPECT_EQ(parse_element(to_string(e), alg), e) << to_string(e);
    EXPECT_EQ(deserialize(serialize(e), s), e);
  }
  const ActionSpec s = make_spec(2, 0, Family::Case1, SqrtChoice::Principal);
  EXPECT_EQ(to_string(PBWElement()), "0");
  EXPECT_EQ(parse_element("0", s), PBWElement());
}

TEST(Parser, ErrorsCarryKindAndPosition) {
  const ActionSpec s = make_spec(3, 0, Family::Case1, SqrtChoice::Principal);
  try {
    parse_element("u + q", s);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::UnknownSymbol);
    EXPECT_EQ(e.position(), 4u);
  }
  try {
    parse_element("u*(v", s);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::Syntax);
  }
  try {
    parse_element("u^-1", s);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::Domain);
  }
  EXPECT_THROW(parse_element("u/v", s), ParseError);
}
