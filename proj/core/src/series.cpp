#include "taftinv/series.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace taftinv {

namespace {

QPoly cyclotomic_qpoly(int d) {
  const IntPoly& p = cyclotomic_polynomial(d);
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& x : p) c.emplace_back(x);
  return QPoly(std::move(c));
}

long long pmod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::string format_ratfn(const QRatFn& h) {
  auto wrap = [](const QPoly& p) {
    std::size_t terms = 0;
    for (const auto& c : p.coeffs()) terms += sgn(c) != 0;
    return terms > 1 ? "(" + format_poly(p) + ")" : format_poly(p);
  };
  return wrap(h.num()) + " / " + wrap(h.den());
}

QPoly one_minus_t_powers(const std::vector<int>& exponents) {
  QPoly p(Rational(1));
  for (int a : exponents) {
    if (a <= 0) throw std::invalid_argument("one_minus_t_powers: exponents must be positive");
    p *= QPoly(Rational(1)) - QPoly::monomial(Rational(1), static_cast<std::size_t>(a));
  }
  return p;
}

QRatFn normalize_cyclotomic(const QRatFn& h, const std::vector<int>& periods) {
  if (h.num().zero()) return QRatFn(QPoly(), QPoly(Rational(1)));
  std::set<int> ds;
  for (int a : periods)
    for (int d : divisors(a)) ds.insert(d);
  QPoly num = h.num();
  QPoly den = h.den();
  QPoly rest = den;
  for (int d : ds) {
    const QPoly phi = cyclotomic_qpoly(d);
    if (phi.degree() > rest.degree()) continue;
    int mult = 0;
    for (;;) {
      auto [q, r] = divmod(rest, phi);
      if (!r.zero()) break;
      rest = std::move(q);
      ++mult;
    }
    for (int t = 0; t < mult; ++t) {
      auto [q, r] = divmod(num, phi);
      if (!r.zero()) break;
      num = std::move(q);
      den = divmod(den, phi).first;
    }
  }
  QRatFn out(std::move(num), std::move(den));
  if (rest.degree() > 0) return out.normalize();
  return out.canonicalize();
}

// ---------------------------------------------------------------------------
// Trace series

CRatFn FactoredSeries::to_ratfn() const {
  CPoly num;
  for (const auto& t : numerator) {
    CycNum c = CycNum::root(level, t.zeta_exp);
    if (t.sign < 0) c = -c;
    num += CPoly::monomial(c, static_cast<std::size_t>(t.t_exp));
  }
  CPoly den(CycNum(1L));
  for (const auto& f : denominator)
    den *= CPoly(CycNum(1L)) - CPoly::monomial(CycNum::root(level, f.zeta_exp), static_cast<std::size_t>(f.t_exp));
  return CRatFn(std::move(num), std::move(den));
}

FactoredSeries trace_series_Ax_factored(const ActionSpec& spec, int m) {
  if (spec.family != Family::Case1) throw std::invalid_argument("trace series are computed for case-1 specs");
  const long long w = spec.omega_exp;
  const long long n = spec.n;
  const long long k = spec.k;
  FactoredSeries f;
  f.level = spec.level();
  auto z = [&](long long omega_power) { return pmod(w * omega_power, f.level); };
  f.numerator.push_back({0, 0, +1});
  if (spec.order_n()) {
    f.denominator.push_back({1, z(m * (k + 1)), 0});
    f.denominator.push_back({2, z(m * (2 * k + 1)), 0});
    f.denominator.push_back({static_cast<int>(n), 0, 0});
  } else {
    f.numerator.push_back({static_cast<int>(4 * n - 2), z(-2 * m * (k + 1)), -1});
    f.denominator.push_back({1, z(m * (k + 1)), 0});
    f.denominator.push_back({2, z(m * (2 * k + 1)), 0});
    f.denominator.push_back({static_cast<int>(2 * n - 1), z(-m * (k + 1)), 0});
    f.denominator.push_back({static_cast<int>(2 * n), 0, 0});
  }
  return f;
}

CRatFn trace_series_Ax(const ActionSpec& spec, int m) { return trace_series_Ax_factored(spec, m).to_ratfn(); }

CRatFn trace_series_A(const ActionSpec& spec, int m) {
  const long long w = spec.omega_exp;
  const long long k = spec.k;
  FactoredSeries f;
  f.level = spec.level();
  f.numerator.push_back({0, 0, +1});
  f.denominator.push_back({1, pmod(w * m * (k + 1), f.level), 0});
  f.denominator.push_back({1, pmod(w * m * k, f.level), 0});
  f.denominator.push_back({2, pmod(w * m * (2 * k + 1), f.level), 0});
  return f.to_ratfn();
}

// Each factor 1/(1 - c t^e) with c^n = 1 is rewritten as
// (sum_{i<n} c^i t^{ei}) / (1 - t^{en}), giving every g^m the same rational
// denominator. Numerators are accumulated in the group ring Z[Z/2n] (a
// coefficient array per power of t) and only then pushed into Q(zeta_2n).
QRatFn molien(const ActionSpec& spec) {
  const int n = spec.n;
  const int L = spec.level();
  std::vector<FactoredSeries> traces;
  traces.reserve(n);
  for (int m = 0; m < n; ++m) traces.push_back(trace_series_Ax_factored(spec, m));

  const std::size_t nf = traces[0].denominator.size();
  std::vector<bool> lift(nf, false);
  for (const auto& tr : traces)
    for (std::size_t f = 0; f < nf; ++f)
      if (tr.denominator[f].zeta_exp != 0) lift[f] = true;

  std::vector<int> den_exponents;
  int num_degree = 0;
  for (const auto& t : traces[0].numerator) num_degree = std::max(num_degree, t.t_exp);
  for (std::size_t f = 0; f < nf; ++f) {
    const int e = traces[0].denominator[f].t_exp;
    den_exponents.push_back(lift[f] ? e * n : e);
    if (lift[f]) num_degree += e * (n - 1);
  }

  using Row = std::vector<long long>;
  std::vector<Row> acc(num_degree + 1, Row(L, 0));
  for (const auto& tr : traces) {
    std::vector<Row> cur(num_degree + 1, Row(L, 0));
    int cur_deg = 0;
    for (const auto& t : tr.numerator) {
      cur[t.t_exp][pmod(t.zeta_exp, L)] += t.sign;
      cur_deg = std::max(cur_deg, t.t_exp);
    }
    for (std::size_t f = 0; f < nf; ++f) {
      if (!lift[f]) continue;
      const int e = tr.denominator[f].t_exp;
      const long long z = tr.denominator[f].zeta_exp;
      std::vector<Row> next(num_degree + 1, Row(L, 0));
      for (int deg = 0; deg <= cur_deg; ++deg)
        for (int r = 0; r < L; ++r) {
          const long long v = cur[deg][r];
          if (!v) continue;
          for (int i = 0; i < n; ++i) next[deg + e * i][pmod(r + z * i, L)] += v;
        }
      cur = std::move(next);
      cur_deg += e * (n - 1);
    }
    for (int deg = 0; deg <= cur_deg; ++deg)
      for (int r = 0; r < L; ++r) acc[deg][r] += cur[deg][r];
  }

  std::vector<Rational> num(num_degree + 1);
  const Rational inv_n(1, n);
  for (int deg = 0; deg <= num_degree; ++deg) {
    std::vector<Rational> c(L);
    bool any = false;
    for (int r = 0; r < L; ++r) {
      c[r] = Rational(static_cast<long>(acc[deg][r]));
      any = any || acc[deg][r] != 0;
    }
    if (!any) continue;
    const CycNum x = CycNum::from_coeffs(L, std::move(c));
    if (!x.is_rational())
      throw std::logic_error("Molien average has an irrational coefficient at t^" + std::to_string(deg) + ": " +
                             x.to_string());
    num[deg] = x.rational_value() * inv_n;
  }
  QRatFn h(QPoly(std::move(num)), one_minus_t_powers(den_exponents));
  return normalize_cyclotomic(h, den_exponents);
}

// h(1/t) / h(t) = t^(deg D - deg N) * (rev N * D) / (N * rev D).
GorensteinVerdict stanley_test(const QRatFn& h) {
  GorensteinVerdict v;
  if (h.num().zero()) return v;
  const QPoly P = h.num().reversed() * h.den();
  const QPoly Q = h.num() * h.den().reversed();
  const int s = P.valuation() - Q.valuation();
  const Rational ratio = P.coeff(P.valuation()) / Q.coeff(Q.valuation());
  int sign = 0;
  if (ratio == 1)
    sign = 1;
  else if (ratio == -1)
    sign = -1;
  else
    return v;
  const Rational rs(sign);
  const bool match = s >= 0 ? P == Q.shifted(s) * rs : P.shifted(-s) == Q * rs;
  if (!match) return v;
  v.gorenstein = true;
  v.sign = sign;
  v.m = s + h.den().degree() - h.num().degree();
  return v;
}

std::optional<ClosedForm> known_hilbert_series(const ActionSpec& spec) {
  if (spec.order_n()) return std::nullopt;
  const int n = spec.n;
  const int k = spec.k;
  auto sparse = [](std::initializer_list<std::pair<int, long>> terms) {
    QPoly p;
    for (const auto& [e, c] : terms) p += QPoly::monomial(Rational(c), static_cast<std::size_t>(e));
    return p;
  };
  auto make = [&](std::string name, QPoly num, std::vector<int> den, GorensteinVerdict v) {
    ClosedForm f{std::move(name), QRatFn(std::move(num), one_minus_t_powers(den)), den, v};
    return f;
  };
  if (n == 2 && k == 0)
    return make("n = 2, k = 0",
                sparse({{0, 1}, {6, -1}, {7, -1}, {8, -2}, {9, -1}, {11, 2}, {12, 2}, {13, 2}, {14, 1}, {15, -1},
                        {16, -1}, {17, -1}}),
                {2, 3, 4, 4, 4, 5}, {false, 0, 0});
  if (k == n - 1)
    return make("k = n-1", sparse({{0, 1}, {4 * n - 2, -1}}), {1, 2 * n - 1, 2 * n, 2 * n}, {true, -1, 2 * (n + 1)});
  if (n % 2 == 1 && 2 * k == n - 1)
    return make("n odd, k = (n-1)/2", sparse({{0, 1}, {4 * n, -1}}), {2, n, 2 * n, 2 * n}, {true, -1, n + 2});
  if (n % 4 == 2 && n > 2 && (4 * k == n - 2 || 4 * k == 3 * n - 2)) {
    if (std::gcd(k + 1, n) == 2)
      return make("n = 2 mod 4, omega^(k+1) of order n/2", sparse({{0, 1}, {4 * n, -1}}), {4, n / 2, 2 * n, 2 * n},
                  {true, -1, n / 2 + 4});
    return make("n = 2 mod 4, omega^(k+1) of order n", sparse({{0, 1}, {n + 4, -1}, {4 * n, -1}, {5 * n + 4, 1}}),
                {4, n / 2 + 2, n, 2 * n, 2 * n}, {true, -1, n / 2 + 2});
  }
  return std::nullopt;
}

CycNum hdet_from_trace(const CRatFn& trace, int dimension) {
  if (trace.num().zero()) throw std::domain_error("hdet: zero trace series");
  const CycNum lead = trace.num().leading() / trace.den().leading();
  const CycNum sign(dimension % 2 ? -1L : 1L);
  return sign / lead;
}

CycNum hdet_ax(const ActionSpec& spec) { return hdet_from_trace(trace_series_Ax(spec, 1), 3); }

CycNum hdet_a(const ActionSpec& spec) {
  const auto r = superpotential_check(spec);
  if (!r.x_annihilates) throw std::logic_error("x does not annihilate the superpotential");
  return r.g_eigenvalue;
}

ReflectionClass reflection_classify(int n, int k) {
  if (n < 2 || k < 0 || k >= n) throw std::invalid_argument("reflection_classify: need 0 <= k < n, n >= 2");
  ReflectionClass c;
  c.d = std::gcd(k + 1, n);
  c.e = std::gcd(2 * k + 1, n);
  const int de = c.d * c.e;
  c.kind = de == 1 ? 1 : de == n ? 2 : 3;
  return c;
}

bool gorenstein_congruence(int n, int k) {
  const long long lhs =
      static_cast<long long>(k + 1) * std::gcd(2 * k + 1, n) + static_cast<long long>(2 * k + 1) * std::gcd(k + 1, n);
  return lhs % n == 0;
}

unsigned long long restricted_partition(const std::vector<int>& parts, int d) {
  if (parts.empty()) throw std::invalid_argument("restricted_partition: empty part list");
  if (d < 0) return 0;
  std::vector<unsigned long long> ways(static_cast<std::size_t>(d) + 1, 0);
  ways[0] = 1;
  for (int s : parts) {
    if (s <= 0) throw std::invalid_argument("restricted_partition: parts must be positive");
    for (int x = s; x <= d; ++x) ways[x] += ways[x - s];
  }
  return ways[d];
}

char theorem_coverage(int n, int k) {
  if (k == n - 1) return 'a';
  if ((4 * k + 3) % n == 0) return 'b';
  if (n >= 3 && (4 * k + 2) % n == 0) return 'c';
  return '-';
}

std::vector<TableCell> gorenstein_table(int n_max, unsigned workers) {
  if (n_max < 2) throw std::invalid_argument("gorenstein_table: n_max must be at least 2");
  std::vector<TableCell> cells;
  for (int n = 2; n <= n_max; ++n)
    for (int k = 0; k < n; ++k) {
      TableCell c;
      c.n = n;
      c.k = k;
      c.covered = theorem_coverage(n, k);
      cells.push_back(c);
    }
  if (workers == 0) {
    if (const char* env = std::getenv("TAFTINV_WORKERS")) workers = static_cast<unsigned>(std::max(1, std::atoi(env)));
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  }
  workers = std::min<unsigned>(workers, static_cast<unsigned>(cells.size()));

  std::atomic<std::size_t> next{0};
  std::vector<std::string> errors(workers);
  auto work = [&](unsigned id) {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
        TableCell& c = cells[i];
        const ActionSpec spec = make_spec(c.n, c.k, Family::Case1, SqrtChoice::Principal);
        const GorensteinVerdict v = stanley_test(molien(spec));
        c.gorenstein = v.gorenstein;
        c.sign = v.sign;
        c.m = v.m;
      }
    } catch (const std::exception& e) {
      errors[id] = e.what();
      next = cells.size();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (!e.empty()) throw std::runtime_error("gorenstein_table: " + e);
  return cells;
}

std::string table_csv(const std::vector<TableCell>& cells) {
  std::ostringstream os;
  os << "n,k,gorenstein,covered_by_thm\n";
  for (const auto& c : cells)
    os << c.n << "," << c.k << "," << (c.gorenstein ? "true" : "false") << "," << c.covered << "\n";
  return os.str();
}

// (v) marks a Gorenstein cell covered by one of the three sufficient
// conditions, v an uncovered Gorenstein cell, . a non-Gorenstein cell.
std::string table_grid(const std::vector<TableCell>& cells) {
  int n_max = 0;
  for (const auto& c : cells) n_max = std::max(n_max, c.n);
  std::ostringstream os;
  os << " n\\k";
  for (int k = 0; k < n_max; ++k) os << std::setw(4) << k;
  os << "\n";
  for (int n = 2; n <= n_max; ++n) {
    os << std::setw(4) << n;
    for (int k = 0; k < n_max; ++k) {
      auto it = std::find_if(cells.begin(), cells.end(), [&](const TableCell& c) { return c.n == n && c.k == k; });
      std::string mark;
      if (it == cells.end())
        mark = "";
      else if (!it->gorenstein)
        mark = ".";
      else
        mark = it->covered != '-' ? "(v)" : "v";
      os << std::setw(4) << mark;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace taftinv
