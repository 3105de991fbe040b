#include <gtest/gtest.h>

#include <random>

#include "taftinv/invariants.hpp"
#include "taftinv/series.hpp"

using namespace taftinv;

namespace {

QPoly qp(std::vector<long> c) {
  std::vector<Rational> r;
  for (long x : c) r.emplace_back(x);
  return QPoly(std::move(r));
}

QRatFn rational_part(const CRatFn& h) {
  auto conv = [](const CPoly& p) {
    std::vector<Rational> c;
    for (const auto& x : p.coeffs()) {
      if (!x.is_rational()) throw std::logic_error("not rational");
      c.push_back(x.rational_value());
    }
    return QPoly(std::move(c));
  };
  return QRatFn(conv(h.num()), conv(h.den()));
}

// Trace of g^m on a kernel basis: bring the basis to reduced echelon form,
// then read the coefficient of each image at its row's pivot.
CycNum brute_trace(const InvariantEngine& eng, const InvariantBasis& b, int m) {
  const int d = b.degree;
  if (b.dim() == 0) return CycNum();
  Matrix K(b.dim(), graded_basis(d).size());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const Vec v = coordinates(b.vectors[i], d);
    for (std::size_t j = 0; j < v.size(); ++j) K(i, j) = v[j];
  }
  const auto pivots = rref(K);
  CycNum tr;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    PBWElement row;
    const auto basis = graded_basis(d);
    for (std::size_t j = 0; j < basis.size(); ++j) row.add(basis[j], K(i, j));
    PBWElement img = row;
    for (int t = 0; t < m; ++t) img = eng.action().act_g(img);
    tr += coordinates(img, d)[pivots[i]];
  }
  return tr;
}

std::vector<ActionSpec> specs_up_to(int n_max) {
  std::vector<ActionSpec> out;
  for (int n = 2; n <= n_max; ++n)
    for (int k = 0; k < n; ++k)
      for (auto c : {SqrtChoice::Principal, SqrtChoice::Alternate}) out.push_back(make_spec(n, k, Family::Case1, c));
  return out;
}

}  // namespace

TEST(RatFn, NormalizeIsIdempotentAndKeepsTheSeries) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long> a(1 + rng() % 5), b(1 + rng() % 4), c(1 + rng() % 3);
    for (auto& x : a) x = static_cast<long>(rng() % 7) - 3;
    for (auto& x : b) x = static_cast<long>(rng() % 7) - 3;
    for (auto& x : c) x = static_cast<long>(rng() % 7) - 3;
    b[0] = 1;
    c[0] = 2;
    const QRatFn h(qp(a) * qp(c), qp(b) * qp(c));
    QRatFn n1 = h;
    n1.normalize();
    QRatFn n2 = n1;
    n2.normalize();
    EXPECT_EQ(n1.num(), n2.num());
    EXPECT_EQ(n1.den(), n2.den());
    EXPECT_EQ(n1.den().coeff(0), Rational(1));
    EXPECT_EQ(h.series(30), n1.series(30));
  }
}

TEST(RatFn, SubstituteInverse) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long> a(1 + rng() % 5);
    std::vector<long> b(a.size() + rng() % 3);
    for (auto& x : a) x = static_cast<long>(rng() % 7) - 3;
    for (auto& x : b) x = static_cast<long>(rng() % 7) - 3;
    a.back() = 1;
    b.front() = 1;
    b.back() = 2;
    const QRatFn h(qp(a), qp(b));
    if (h.num().zero()) continue;
    // h(1/t) = t^(deg b - deg a) rev(a) / rev(b), with deg a <= deg b
    const QRatFn g = h.substitute_inverse();
    const int shift = h.den().degree() - h.num().degree();
    ASSERT_GE(shift, 0);
    const QPoly num = h.num().reversed().shifted(shift);
    const QPoly den = h.den().reversed();
    EXPECT_TRUE(g == QRatFn(num, den));
    EXPECT_EQ(g.series(30), QRatFn(num, den).series(30));
    EXPECT_TRUE(g.substitute_inverse() == h);
  }
}

TEST(RatFn, CyclotomicNormalizationMatchesEuclid) {
  const QRatFn h(qp({1, 0, 0, 0, 0, 0, -1}), one_minus_t_powers({1, 3, 4, 4}));
  QRatFn e = h;
  e.normalize();
  const QRatFn c = normalize_cyclotomic(h, {1, 3, 4, 4});
  EXPECT_EQ(c.num(), e.num());
  EXPECT_EQ(c.den(), e.den());
}

TEST(RatFn, Formatting) {
  EXPECT_EQ(format_ratfn(QRatFn(qp({1, 0, -1}), qp({1, -1}))), "(1 - t^2) / (1 - t)");
  EXPECT_EQ(format_ratfn(QRatFn(qp({1}), qp({1, -1}))), "1 / (1 - t)");
}

TEST(Stanley, SimpleCases) {
  const auto v = stanley_test(QRatFn(qp({1}), qp({1, -1})));
  EXPECT_TRUE(v.gorenstein);
  EXPECT_EQ(v.sign, -1);
  EXPECT_EQ(v.m, 1);
  const auto c = stanley_test(QRatFn(qp({3}), qp({1})));
  EXPECT_TRUE(c.gorenstein);
  EXPECT_EQ(c.sign, 1);
  EXPECT_EQ(c.m, 0);
  // polynomial ring on generators of degrees 1, 2, 5: m = 8, sign (-1)^3
  const auto p = stanley_test(QRatFn(qp({1}), one_minus_t_powers({1, 2, 5})));
  EXPECT_TRUE(p.gorenstein);
  EXPECT_EQ(p.sign, -1);
  EXPECT_EQ(p.m, 8);
  EXPECT_FALSE(stanley_test(QRatFn(qp({1, 1, 0, 1}), one_minus_t_powers({1, 2}))).gorenstein);
}

TEST(Stanley, FunctionalEquationHoldsWhenReported) {
  for (int n = 2; n <= 7; ++n)
    for (int k = 0; k < n; ++k) {
      const QRatFn h = molien(make_spec(n, k, Family::Case1, SqrtChoice::Principal));
      const auto v = stanley_test(h);
      if (!v.gorenstein) continue;
      const QRatFn rhs(h.num() * Rational(v.sign), h.den());
      const QRatFn shifted = v.m >= 0 ? QRatFn(rhs.num().shifted(v.m), rhs.den()) : QRatFn(rhs.num(), rhs.den().shifted(-v.m));
      EXPECT_TRUE(h.substitute_inverse() == shifted) << n << " " << k;
    }
}

TEST(Traces, IdentityTraceIsHilbertSeriesOfAx) {
  for (int n = 2; n <= 6; ++n) {
    const ActionSpec a = make_spec(n, 0, Family::Case1, SqrtChoice::Principal);
    EXPECT_TRUE(rational_part(trace_series_Ax(a, 0)) ==
                QRatFn(qp({1}) - QPoly::monomial(Rational(1), 4 * n - 2), one_minus_t_powers({1, 2, 2 * n - 1, 2 * n})));
    if (n % 2) {
      const ActionSpec b = make_spec(n, 0, Family::Case1, SqrtChoice::Alternate);
      EXPECT_TRUE(rational_part(trace_series_Ax(b, 0)) == QRatFn(qp({1}), one_minus_t_powers({1, 2, n})));
    }
  }
}

TEST(Traces, AxIsGorensteinInBothRegimes) {
  for (const auto& s : specs_up_to(7)) {
    const auto v = stanley_test(rational_part(trace_series_Ax(s, 0)));
    EXPECT_TRUE(v.gorenstein) << s.describe();
  }
}

TEST(Traces, ClosedFormsMatchBruteForceTraces) {
  for (const auto& s : specs_up_to(4)) {
    const InvariantEngine eng(s);
    const auto inv = eng.invariants_up_to(3 * s.n, Flavor::XOnly);
    for (int m = 0; m < s.n; ++m) {
      const auto coeffs = trace_series_Ax(s, m).series(static_cast<std::size_t>(3 * s.n) + 1);
      for (int d = 0; d <= 3 * s.n; ++d) EXPECT_EQ(coeffs[d], brute_trace(eng, inv[d], m)) << s.describe() << " m=" << m << " d=" << d;
    }
  }
}

TEST(Molien, AgreesWithInvariantDimensions) {
  for (const auto& s : specs_up_to(5)) {
    const auto coeffs = molien(s).series(static_cast<std::size_t>(4 * s.n) + 5);
    const auto inv = InvariantEngine(s).invariants_up_to(4 * s.n + 4, Flavor::Full);
    for (int d = 0; d <= 4 * s.n + 4; ++d) EXPECT_EQ(coeffs[d], Rational(static_cast<long>(inv[d].dim()))) << s.describe() << " d=" << d;
  }
}

TEST(Molien, SmallClosedForms) {
  const QRatFn h21 = molien(make_spec(2, 1, Family::Case1, SqrtChoice::Principal));
  EXPECT_TRUE(h21 == QRatFn(qp({1, 0, 0, 0, 0, 0, -1}), one_minus_t_powers({1, 3, 4, 4})));
  // dimensions of (A^T)_d for n = 2, k = 0, from the kernel computation
  const std::vector<long> dims20 = {1, 0, 1, 1, 4, 2, 4, 4, 9, 6, 9, 9, 16, 12, 16};
  const auto c = molien(make_spec(2, 0, Family::Case1, SqrtChoice::Principal)).series(dims20.size());
  for (std::size_t d = 0; d < dims20.size(); ++d) EXPECT_EQ(c[d], Rational(dims20[d]));
  const std::vector<long> dims41 = {1, 0, 1, 0, 1, 1, 1, 1, 4, 1, 4, 2, 4, 4, 4};
  const auto c4 = molien(make_spec(4, 1, Family::Case1, SqrtChoice::Principal)).series(dims41.size());
  for (std::size_t d = 0; d < dims41.size(); ++d) EXPECT_EQ(c4[d], Rational(dims41[d]));
}

TEST(Molien, KnownClosedFormsAgree) {
  for (int n = 2; n <= 10; ++n)
    for (int k = 0; k < n; ++k) {
      const ActionSpec s = make_spec(n, k, Family::Case1, SqrtChoice::Principal);
      const auto cf = known_hilbert_series(s);
      if (!cf) continue;
      const QRatFn h = molien(s);
      EXPECT_TRUE(h == cf->series) << cf->name << " n=" << n << " k=" << k;
      const auto v = stanley_test(h);
      EXPECT_EQ(v.gorenstein, cf->verdict.gorenstein);
      EXPECT_EQ(v.m, cf->verdict.m);
      EXPECT_EQ(v.sign, cf->verdict.sign);
    }
  EXPECT_FALSE(known_hilbert_series(make_spec(3, 0, Family::Case1, SqrtChoice::Alternate)).has_value());
}

TEST(Hdet, OnAFromTraceMatchesSuperpotential) {
  for (const auto& s : specs_up_to(8)) {
    EXPECT_EQ(hdet_from_trace(trace_series_A(s, 1)), s.omega_pow(4 * s.k + 2));
    EXPECT_EQ(hdet_a(s), s.omega_pow(4 * s.k + 2));
  }
}

TEST(Hdet, OnAxReadsTheLeadingTermAtInfinity) {
  for (const auto& s : specs_up_to(8)) {
    if (s.order_n()) continue;
    const CRatFn tr = trace_series_Ax(s, 1);
    // Tr(g, 1/t) as a series in t starts at t^4 with coefficient -c^-1
    const CRatFn inv = tr.substitute_inverse();
    const auto c = inv.series(6);
    for (int i = 0; i < 4; ++i) EXPECT_TRUE(c[i].is_zero());
    const CycNum h = hdet_ax(s);
    EXPECT_EQ(-h.inverse(), c[4]);
    EXPECT_EQ(h, s.omega_pow(4 * s.k + 3)) << s.describe();
    EXPECT_EQ(h.is_one(), (4 * s.k + 3) % s.n == 0);
  }
  EXPECT_EQ(hdet_ax(make_spec(2, 1, Family::Case1, SqrtChoice::Principal)), CycNum(-1L));
}

TEST(OrderN, ReflectionTrichotomy) {
  auto rc = reflection_classify(3, 0);
  EXPECT_EQ(rc.kind, 1);
  EXPECT_EQ(rc.d, 1);
  EXPECT_EQ(rc.e, 1);
  rc = reflection_classify(3, 1);
  EXPECT_EQ(rc.kind, 2);
  EXPECT_EQ(rc.e, 3);
  rc = reflection_classify(15, 4);
  EXPECT_EQ(rc.kind, 2);
  EXPECT_EQ(rc.d, 5);
  EXPECT_EQ(rc.e, 3);
  EXPECT_EQ(reflection_classify(9, 1).kind, 3);
  EXPECT_THROW(reflection_classify(3, 3), std::invalid_argument);
}

TEST(OrderN, Congruence) {
  EXPECT_FALSE(gorenstein_congruence(3, 0));
  EXPECT_TRUE(gorenstein_congruence(3, 1));
  for (int n = 3; n <= 25; n += 2)
    for (int k = 0; k < n; ++k)
      if (reflection_classify(n, k).kind == 1) EXPECT_EQ(gorenstein_congruence(n, k), (3 * k + 2) % n == 0);
}

TEST(OrderN, CongruenceAgreesWithStanley) {
  for (int n = 3; n <= 11; n += 2)
    for (int k = 0; k < n; ++k)
      EXPECT_EQ(stanley_test(molien(make_spec(n, k, Family::Case1, SqrtChoice::Alternate))).gorenstein,
                gorenstein_congruence(n, k))
          << n << " " << k;
}

TEST(Partitions, SmallValues) {
  EXPECT_EQ(restricted_partition({2, 3}, 6), 2u);
  EXPECT_EQ(restricted_partition({4, 8}, 4), 1u);
  EXPECT_EQ(restricted_partition({1}, -1), 0u);
  EXPECT_EQ(restricted_partition({1, 1}, 3), 4u);
  EXPECT_THROW(restricted_partition({}, 3), std::invalid_argument);
}

TEST(Partitions, GeneratingFunction) {
  for (int n = 2; n <= 6; ++n)
    for (const std::vector<int>& parts : {std::vector<int>{n, 2 * n}, std::vector<int>{2 * n, n * (2 * n - 1)}}) {
      const auto c = QRatFn(qp({1}), one_minus_t_powers(parts)).series(51);
      for (int d = 0; d <= 50; ++d) EXPECT_EQ(Rational(static_cast<long>(restricted_partition(parts, d))), c[d]);
    }
}

TEST(Table, CoverageFlags) {
  EXPECT_EQ(theorem_coverage(9, 8), 'a');
  EXPECT_EQ(theorem_coverage(9, 6), 'b');
  EXPECT_EQ(theorem_coverage(10, 2), 'c');
  EXPECT_EQ(theorem_coverage(2, 0), '-');  // 4k+2 = 0 mod 2 but n < 3
  EXPECT_EQ(theorem_coverage(9, 1), '-');
}

TEST(Table, RowsAndFormats) {
  const auto cells = gorenstein_table(12, 2);
  auto row = [&](int n) {
    std::vector<int> ks;
    for (const auto& c : cells)
      if (c.n == n && c.gorenstein) ks.push_back(c.k);
    return ks;
  };
  EXPECT_EQ(row(9), (std::vector<int>{1, 4, 5, 6, 8}));
  EXPECT_EQ(row(12), (std::vector<int>{1, 3, 4, 7, 11}));
  for (const auto& c : cells)
    if (c.covered != '-') EXPECT_TRUE(c.gorenstein);
  const std::string csv = table_csv(cells);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 77);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,k,gorenstein,covered_by_thm");
  EXPECT_NE(table_grid(cells).find("(v)"), std::string::npos);
  EXPECT_THROW(gorenstein_table(1), std::invalid_argument);
}
