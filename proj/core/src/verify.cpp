#include "taftinv/verify.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "taftinv/invariants.hpp"
#include "taftinv/series.hpp"

namespace taftinv {

namespace {

constexpr std::size_t kMaxFailures = 6;

// Pass/total per named sub-check, plus the first few failures overall.
class Tally {
 public:
  explicit Tally(CriterionResult& r) : r_(r) {}

  void check(const std::string& group, bool ok, const std::function<std::string()>& what) {
    auto& [pass, total] = counts_[index(group)].second;
    ++total;
    if (ok) {
      ++pass;
      return;
    }
    if (r_.failures.size() < kMaxFailures) r_.failures.push_back(group + ": " + what());
  }

  bool finish() {
    bool all = true;
    for (const auto& [name, pt] : counts_) {
      r_.notes.push_back(name + " " + std::to_string(pt.first) + "/" + std::to_string(pt.second));
      all = all && pt.first == pt.second;
    }
    r_.passed = all;
    return all;
  }

 private:
  std::size_t index(const std::string& g) {
    for (std::size_t i = 0; i < counts_.size(); ++i)
      if (counts_[i].first == g) return i;
    counts_.push_back({g, {0, 0}});
    return counts_.size() - 1;
  }

  CriterionResult& r_;
  std::vector<std::pair<std::string, std::pair<int, int>>> counts_;
};

std::string label(const ActionSpec& s) {
  std::ostringstream os;
  os << "n=" << s.n << " k=" << s.k << " sqrt=" << to_string(s.sqrt_choice);
  return os.str();
}

std::vector<ActionSpec> case1_specs(int n) {
  std::vector<ActionSpec> out;
  for (int k = 0; k < n; ++k)
    for (auto c : {SqrtChoice::Principal, SqrtChoice::Alternate}) out.push_back(make_spec(n, k, Family::Case1, c));
  return out;
}

QPoly qpoly(std::vector<long> coeffs) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return QPoly(std::move(c));
}

QPoly sparse_qpoly(const std::vector<std::pair<int, long>>& terms) {
  QPoly p;
  for (const auto& [e, c] : terms) p += QPoly::monomial(Rational(c), static_cast<std::size_t>(e));
  return p;
}

CPoly to_cpoly(const QPoly& p) {
  std::vector<CycNum> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return CPoly(std::move(c));
}

QRatFn closed(const QPoly& num, const std::vector<int>& den) { return QRatFn(num, one_minus_t_powers(den)); }

// Same rational function, and identical after normalizing both sides.
bool same_normalized(const QRatFn& got, const QRatFn& want, const std::vector<int>& periods) {
  if (!(got == want)) return false;
  const QRatFn a = normalize_cyclotomic(got, periods);
  const QRatFn b = normalize_cyclotomic(want, periods);
  return a.num() == b.num() && a.den() == b.den();
}

}  // namespace

const std::map<int, ReferenceRow>& reference_table() {
  static const std::map<int, ReferenceRow> t = {
      {2, {{1}, {1}}},
      {3, {{0, 1, 2}, {0, 1, 2}}},
      {4, {{3}, {3}}},
      {5, {{2, 3, 4}, {2, 3, 4}}},
      {6, {{1, 4, 5}, {1, 4, 5}}},
      {7, {{1, 3, 6}, {1, 3, 6}}},
      {8, {{7}, {7}}},
      {9, {{1, 4, 5, 6, 8}, {4, 6, 8}}},
      {10, {{1, 2, 7, 9}, {2, 7, 9}}},
      {11, {{2, 5, 10}, {2, 5, 10}}},
      {12, {{1, 3, 4, 7, 11}, {11}}},
      {13, {{6, 9, 12}, {6, 9, 12}}},
      {14, {{3, 10, 11, 13}, {3, 10, 13}}},
      {15, {{2, 3, 4, 5, 7, 12, 14}, {3, 7, 14}}},
      {16, {{15}, {15}}},
  };
  return t;
}

namespace {

const std::vector<TableCell>& computed_table() {
  static const std::vector<TableCell> cells = gorenstein_table(16);
  return cells;
}

}  // namespace

CriterionResult criterion_table() {
  CriterionResult r{1, "Gorenstein table for n <= 16 matches the reference grid", false, {}, {}};
  Tally t(r);
  const auto& cells = computed_table();
  t.check("cell count", cells.size() == 135, [&] { return std::to_string(cells.size()) + " cells"; });
  for (const auto& c : cells) {
    const bool want = reference_table().at(c.n).gorenstein.count(c.k) > 0;
    t.check("cells", c.gorenstein == want, [&] {
      return "n=" + std::to_string(c.n) + " k=" + std::to_string(c.k) + " computed " + (c.gorenstein ? "true" : "false");
    });
  }
  t.finish();
  return r;
}

CriterionResult criterion_coverage() {
  CriterionResult r{2, "Cells meeting a sufficient condition are Gorenstein; marks match", false, {}, {}};
  Tally t(r);
  for (const auto& c : computed_table()) {
    const std::string where = "n=" + std::to_string(c.n) + " k=" + std::to_string(c.k);
    if (c.covered != '-') t.check("covered cells are Gorenstein", c.gorenstein, [&] { return where; });
    const bool marked = reference_table().at(c.n).covered.count(c.k) > 0;
    t.check("covered flag matches circled mark", (c.covered != '-') == marked,
            [&] { return where + " flag '" + std::string(1, c.covered) + "'"; });
  }
  t.finish();
  return r;
}

CriterionResult criterion_molien_oracle() {
  CriterionResult r{3, "Molien series agrees with dim (A^T)_d, n <= 6", false, {}, {}};
  Tally t(r);
  for (int n = 2; n <= 6; ++n)
    for (const auto& s : case1_specs(n)) {
      const int top = 4 * n + 3;
      const auto coeffs = molien(s).series(static_cast<std::size_t>(top) + 1);
      const auto inv = InvariantEngine(s).invariants_up_to(top, Flavor::Full);
      for (int d = 0; d <= top; ++d)
        t.check("coefficients", coeffs[d] == Rational(static_cast<long>(inv[d].dim())), [&] {
          return label(s) + " d=" + std::to_string(d) + " molien " + coeffs[d].get_str() + " dim " +
                 std::to_string(inv[d].dim());
        });
    }
  t.finish();
  return r;
}

CriterionResult criterion_identities() {
  CriterionResult r{4, "Closed-form identities hold exactly, n <= 6", false, {}, {}};
  Tally t(r);
  for (int n = 2; n <= 6; ++n)
    for (const auto& s : case1_specs(n)) {
      const InvariantEngine eng(s);
      const DownUp& alg = eng.algebra();
      const TaftAction& act = eng.action();
      for (int m = 0; m <= 4 * n; ++m) {
        const PBWElement vm = PBWElement::monomial(0, 0, m);
        t.check("x.v^m closed form vs skew-derivation", act.act_x(vm) == act.act_x_recursive(vm),
                [&] { return label(s) + " m=" + std::to_string(m); });
        t.check("v^m u closed form vs rewriting", alg.v_power_times_u(m) == alg.normal_form_word(std::string(m, 'v') + "u"),
                [&] { return label(s) + " m=" + std::to_string(m); });
      }
      if (s.order_n()) continue;
      const PBWElement A = element_a(eng);
      const PBWElement U = PBWElement::monomial(1, 0, 0);
      const PBWElement Z = PBWElement::monomial(0, 1, 0);
      const PBWElement xv = act.iterated_x(n - 1, PBWElement::monomial(0, 0, 2 * n - 2));
      const CycNum printed = closed_scalar_printed(eng);
      const CycNum product = closed_scalar_product(eng);
      const PBWElement comm = alg.mul(A, U) - alg.mul(U, A);
      t.check("x^(n-1).v^(2n-2) with the stated scalar", xv == PBWElement::monomial(0, n - 1, 0, printed), [&] {
        return label(s) + ": " + to_string(xv) + " vs " + to_string(PBWElement::monomial(0, n - 1, 0, printed));
      });
      t.check("x^(n-1).v^(2n-2) with the product-form scalar", xv == PBWElement::monomial(0, n - 1, 0, product),
              [&] { return label(s); });
      t.check("az = w^-(k+1) sqrt(w) za", alg.mul(A, Z) == alg.eps() * alg.mul(Z, A), [&] { return label(s); });
      t.check("v^(2n) central", alg.mul(PBWElement::monomial(0, 0, 2 * n), A) == alg.mul(A, PBWElement::monomial(0, 0, 2 * n)),
              [&] { return label(s); });
      t.check("au - ua with the stated constant", comm == PBWElement::monomial(0, n, 0, -(s.sqrt_omega * printed)),
              [&] { return label(s) + ": au - ua = " + to_string(comm); });
      t.check("au - ua with the product-form constant", comm == PBWElement::monomial(0, n, 0, -(s.sqrt_omega * product)),
              [&] { return label(s); });
      CycNum lam(1L);
      for (int m = 1; m < n; ++m) lam *= act.lambda(m);
      const PBWElement a2 = PBWElement::monomial(2 * n - 2, 0, 2 * n, s.omega_pow(2 * (s.k + 1)) * lam * lam);
      t.check("a^2 scalar", alg.mul(A, A) == a2, [&] { return label(s); });
    }
  t.finish();
  return r;
}

CriterionResult criterion_hilbert_regressions() {
  CriterionResult r{5, "Hilbert series regressions", false, {}, {}};
  Tally t(r);
  // A^x in the order-n regime
  for (int n = 3; n <= 7; n += 2)
    for (int k = 0; k < n; ++k) {
      const ActionSpec s = make_spec(n, k, Family::Case1, SqrtChoice::Alternate);
      const QRatFn want = closed(QPoly(Rational(1)), {1, 2, n});
      const CRatFn got = trace_series_Ax(s, 0);
      t.check("A^x series, order n", got == CRatFn(to_cpoly(want.num()), to_cpoly(want.den())), [&] { return label(s); });
      const auto coeffs = want.series(static_cast<std::size_t>(4 * n + 5));
      const InvariantEngine eng(s);
      for (int d = 0; d <= 4 * n + 4; ++d)
        t.check("A^x dimensions, order n", coeffs[d] == Rational(static_cast<long>(eng.x_invariants(d).dim())),
                [&] { return label(s) + " d=" + std::to_string(d); });
    }

  auto regression = [&](const std::string& name, int n, int k, const QPoly& num, const std::vector<int>& den, int sign, int m) {
    const ActionSpec s = make_spec(n, k, Family::Case1, SqrtChoice::Principal);
    const QRatFn h = molien(s);
    std::vector<int> periods = den;
    for (int d : {2 * n, 4 * n - 2, n}) periods.push_back(d);
    t.check(name + " series", same_normalized(h, closed(num, den), periods),
            [&] { return label(s) + ": " + format_ratfn(h); });
    const GorensteinVerdict v = stanley_test(h);
    t.check(name + " Stanley verdict", v.gorenstein && v.sign == sign && v.m == m, [&] {
      return label(s) + " gorenstein=" + std::to_string(v.gorenstein) + " sign=" + std::to_string(v.sign) +
             " m=" + std::to_string(v.m);
    });
  };

  for (int n = 2; n <= 6; ++n)
    regression("k = n-1", n, n - 1, sparse_qpoly({{0, 1}, {4 * n - 2, -1}}), {1, 2 * n - 1, 2 * n, 2 * n}, -1, 2 * (n + 1));
  for (int n : {3, 5})
    regression("n odd, k = (n-1)/2", n, (n - 1) / 2, sparse_qpoly({{0, 1}, {4 * n, -1}}), {2, n, 2 * n, 2 * n}, -1, n + 2);
  for (auto [n, k] : {std::pair{6, 1}, std::pair{10, 7}})
    regression("n = 2 mod 4, omega^(k+1) of order n/2", n, k, sparse_qpoly({{0, 1}, {4 * n, -1}}),
               {4, n / 2, 2 * n, 2 * n}, -1, n / 2 + 4);
  for (auto [n, k] : {std::pair{6, 4}, std::pair{10, 2}})
    regression("n = 2 mod 4, omega^(k+1) of order n", n, k,
               sparse_qpoly({{0, 1}, {n + 4, -1}, {4 * n, -1}, {5 * n + 4, 1}}), {4, n / 2 + 2, n, 2 * n, 2 * n}, -1,
               n / 2 + 2);

  {
    const ActionSpec s = make_spec(2, 0, Family::Case1, SqrtChoice::Principal);
    const QRatFn h = molien(s);
    const QPoly num = qpoly({1, 0, 0, 0, 0, 0, -1, -1, -2, -1, 0, 2, 2, 2, 1, -1, -1, -1});
    const std::vector<int> den = {2, 3, 4, 4, 4, 5};
    t.check("n=2 k=0 series", same_normalized(h, closed(num, den), {2, 3, 4, 5, 6}),
            [&] { return format_ratfn(h); });
    t.check("n=2 k=0 not Gorenstein", !stanley_test(h).gorenstein, [] { return std::string("Stanley test passed"); });
  }
  t.finish();
  return r;
}

CriterionResult criterion_hdet() {
  CriterionResult r{6, "Homological determinants, n <= 8", false, {}, {}};
  Tally t(r);
  for (int n = 2; n <= 8; ++n)
    for (const auto& s : case1_specs(n)) {
      const SuperpotentialReport sp = superpotential_check(s);
      t.check("x.w = 0", sp.x_annihilates, [&] { return label(s); });
      t.check("g.w = w^(4k+2) w", sp.g_eigenvalue == s.omega_pow(4 * s.k + 2),
              [&] { return label(s) + " eigenvalue " + sp.g_eigenvalue.to_string(); });
      if (s.order_n()) continue;
      const CycNum h = hdet_ax(s);
      t.check("hdet on A^x = w^-(4k+3)", h == s.omega_pow(-(4 * s.k + 3)),
              [&] { return label(s) + " computed " + h.to_string(); });
    }
  t.finish();
  return r;
}

CriterionResult criterion_classification() {
  CriterionResult r{7, "Classification of actions", false, {}, {}};
  Tally t(r);
  for (int n = 2; n <= 16; ++n) {
    const auto specs = classify_actions(n);
    t.check("4n specs", specs.size() == static_cast<std::size_t>(4 * n),
            [&] { return "n=" + std::to_string(n) + ": " + std::to_string(specs.size()); });
    for (const auto& s : specs) {
      const ValidityReport v = is_valid_action(to_taft_pair(s), s.alpha, s.beta);
      t.check("valid", v.valid, [&] { return s.describe() + ": " + v.failed; });
      const bool excluded = (s.alpha == CycNum(0L) && s.beta == CycNum(1L)) || (s.alpha == CycNum(2L) && s.beta == CycNum(-1L));
      t.check("(alpha, beta) not (0,1) or (2,-1)", !excluded, [&] { return s.describe(); });
      if (n > 10) continue;
      const auto [t1, t2] = characteristic_roots(s);
      bool found = false;
      for (const auto& back : actions_for_downup(t1, t2))
        found = found || (back.family == s.family && back.n == s.n && back.k == s.k && back.omega == s.omega &&
                          back.sqrt_omega == s.sqrt_omega && back.alpha == s.alpha && back.beta == s.beta);
      t.check("round trip through characteristic roots", found, [&] { return s.describe(); });
    }
  }

  std::mt19937 rng(20240917);
  for (int n = 2; n <= 6; ++n) {
    const auto specs = classify_actions(n);
    const int L = 2 * n;
    for (int trial = 0; trial < 100; ++trial) {
      const ActionSpec& s = specs[rng() % specs.size()];
      TaftPair pair = to_taft_pair(s);
      CycNum alpha = s.alpha;
      CycNum beta = s.beta;
      // a nonzero element of Q(zeta_2n): +-c zeta^e with c in 1..3
      const CycNum delta = CycNum(static_cast<long>(rng() % 3 + 1) * (rng() % 2 ? 1 : -1)) * CycNum::root(L, rng() % L);
      // x.v = q u is the only nonzero entry of x; rescaling it stays valid, so it is left alone.
      std::vector<std::pair<int, int>> xslots;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          if (pair.xmat[i][j].is_zero()) xslots.push_back({i, j});
      const int what = static_cast<int>(rng() % (6 + xslots.size()));
      std::string desc;
      if (what == 0) {
        alpha += delta;
        desc = "alpha";
      } else if (what == 1) {
        beta += delta;
        if (beta.is_zero()) beta += CycNum(1L);
        desc = "beta";
      } else if (what < 6) {
        pair.gmat[(what - 2) / 2][(what - 2) % 2] += delta;
        desc = "gmat";
      } else {
        const auto [i, j] = xslots[what - 6];
        pair.xmat[i][j] += delta;
        desc = "xmat";
      }
      const ValidityReport v = is_valid_action(pair, alpha, beta);
      t.check("perturbations rejected", !v.valid, [&] { return s.describe() + " perturbed " + desc; });
    }
  }
  t.finish();
  return r;
}

CriterionResult criterion_presentations() {
  CriterionResult r{8, "Presentation dimension counts and commutativity", false, {}, {}};
  Tally t(r);
  for (int n = 2; n <= 5; ++n)
    for (const auto& s : case1_specs(n)) {
      const PresentationReport p = verify_presentation(s, 4 * n + 2);
      for (const auto& row : p.dimension_table)
        t.check(s.order_n() ? "monomials in u, z, v^n" : "monomials a^e u^j z^l v^(2nm)", row.computed == row.predicted,
                [&] {
                  return label(s) + " d=" + std::to_string(row.degree) + " dim " + std::to_string(row.computed) +
                         " monomials " + std::to_string(row.predicted);
                });
      for (const auto& c : p.checks)
        if (c.name.rfind("ordered monomials", 0) == 0) t.check(c.name, c.passed, [&] { return label(s) + " " + c.detail; });
    }
  for (int n = 2; n <= 6; ++n)
    for (const auto& s : case1_specs(n)) {
      if (s.order_n()) {
        const CommutativityReport c = commutativity_report(s, 3 * n);
        t.check("order n: A^T commutative", c.commutative, [&] { return label(s); });
        continue;
      }
      const CommutativityReport c = commutativity_report(s, 2 * n);
      const PBWElement b = PBWElement::monomial(2 * s.k + 1, n - s.k - 1, 0);
      const PBWElement z = PBWElement::monomial(0, n, 0);
      bool ok = !c.commutative && c.witness && c.witness->first == b && c.witness->second == z;
      if (ok) {
        const DownUp alg(s);
        ok = alg.mul(b, z) == -alg.mul(z, b);
      }
      t.check("order 2n: anti-commuting witness", ok, [&] { return label(s); });
    }
  t.finish();
  return r;
}

CriterionResult criterion_order_n_congruence() {
  CriterionResult r{9, "Order-n Gorenstein congruence agrees with Stanley, odd n <= 15", false, {}, {}};
  Tally t(r);
  for (int n = 3; n <= 15; n += 2)
    for (int k = 0; k < n; ++k) {
      const ActionSpec s = make_spec(n, k, Family::Case1, SqrtChoice::Alternate);
      if (!s.order_n()) throw std::logic_error("expected an order-n square root");
      const bool stanley = stanley_test(molien(s)).gorenstein;
      t.check("agreement", stanley == gorenstein_congruence(n, k), [&] {
        return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " stanley " + (stanley ? "true" : "false");
      });
    }
  t.finish();
  return r;
}

CriterionResult run_criterion(int id) {
  switch (id) {
    case 1: return criterion_table();
    case 2: return criterion_coverage();
    case 3: return criterion_molien_oracle();
    case 4: return criterion_identities();
    case 5: return criterion_hilbert_regressions();
    case 6: return criterion_hdet();
    case 7: return criterion_classification();
    case 8: return criterion_presentations();
    case 9: return criterion_order_n_congruence();
    default: throw std::invalid_argument("criterion id must be in 1..9");
  }
}

const std::map<std::string, std::vector<int>>& suites() {
  static const std::map<std::string, std::vector<int>> s = {
      {"identities", {4, 6, 7}},
      {"presentations", {8}},
      {"molien", {3, 5, 9}},
      {"table", {1, 2}},
  };
  return s;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " AC" << r.id << " " << r.title;
  if (!r.notes.empty()) {
    os << " [";
    for (std::size_t i = 0; i < r.notes.size(); ++i) os << (i ? "; " : "") << r.notes[i];
    os << "]";
  }
  for (const auto& f : r.failures) os << "\n    " << f;
  return os.str();
}

}  // namespace taftinv
