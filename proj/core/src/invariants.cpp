#include "taftinv/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "json.hpp"
#include "taftinv/series.hpp"

namespace taftinv {

namespace {

unsigned resolve_workers(unsigned workers, std::size_t jobs) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(workers, jobs)));
}

PBWElement from_coords(const std::vector<Monomial>& basis, const Vec& v) {
  PBWElement e;
  for (std::size_t t = 0; t < basis.size(); ++t) e.add(basis[t], v[t]);
  return e;
}

std::string both_sides(const PBWElement& lhs, const PBWElement& rhs) {
  return "lhs = " + to_string(lhs) + "; rhs = " + to_string(rhs);
}

NamedCheck identity(std::string name, const PBWElement& lhs, const PBWElement& rhs) {
  NamedCheck c;
  c.name = std::move(name);
  c.passed = lhs == rhs;
  if (!c.passed) c.detail = both_sides(lhs, rhs);
  return c;
}

std::vector<std::size_t> series_dims(const CRatFn& h, int max_degree) {
  std::vector<std::size_t> out;
  for (const CycNum& c : h.series(static_cast<std::size_t>(max_degree) + 1)) {
    if (!c.is_rational()) throw std::logic_error("series coefficient is not rational: " + c.to_string());
    const Rational r = c.rational_value();
    if (r.get_den() != 1 || sgn(r) < 0) throw std::logic_error("series coefficient is not a dimension: " + c.to_string());
    out.push_back(r.get_num().get_ui());
  }
  return out;
}

std::vector<std::size_t> series_dims(const QRatFn& h, int max_degree) {
  std::vector<std::size_t> out;
  for (const Rational& r : h.series(static_cast<std::size_t>(max_degree) + 1)) {
    if (r.get_den() != 1 || sgn(r) < 0) throw std::logic_error("series coefficient is not a dimension");
    out.push_back(r.get_num().get_ui());
  }
  return out;
}

}  // namespace

std::string to_string(Flavor f) { return f == Flavor::Full ? "full" : "x-only"; }

Vec coordinates(const PBWElement& e, int d) {
  const auto basis = graded_basis(d);
  Vec v(basis.size());
  for (const auto& [m, c] : e.terms()) {
    if (m.degree() != d) throw std::invalid_argument("coordinates: element is not homogeneous of degree " + std::to_string(d));
    const auto it = std::lower_bound(basis.begin(), basis.end(), m);
    v[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return v;
}

// ---------------------------------------------------------------------------
// InvariantEngine

InvariantEngine::InvariantEngine(const ActionSpec& spec)
    : alg_(std::make_unique<DownUp>(spec)), act_(std::make_unique<TaftAction>(*alg_)) {}

InvariantBasis InvariantEngine::block_kernels(int d, Flavor f) const {
  InvariantBasis out;
  out.degree = d;
  out.flavor = f;
  if (d < 0) return out;
  const long long n = spec().n;
  const long long k = spec().k;
  for (int p = 0; p <= d; ++p) {
    const int q = d - p;
    if (f == Flavor::Full && ((k + 1) * p + k * q) % n != 0) continue;
    const auto src = bidegree_basis(p, q);
    for (const Vec& v : nullspace(act_->x_block(p, q))) out.vectors.push_back(from_coords(src, v));
  }
  return out;
}

InvariantBasis InvariantEngine::x_invariants(int d) const { return block_kernels(d, Flavor::XOnly); }
InvariantBasis InvariantEngine::full_invariants(int d) const { return block_kernels(d, Flavor::Full); }

InvariantBasis InvariantEngine::x_invariants_dense(int d) const {
  InvariantBasis out;
  out.degree = d;
  const GradedOperator x = act_->operator_matrix(Letter::X, d);
  for (const Vec& v : nullspace(x.matrix)) out.vectors.push_back(from_coords(x.basis, v));
  return out;
}

InvariantBasis InvariantEngine::full_invariants_dense(int d) const {
  InvariantBasis out;
  out.degree = d;
  out.flavor = Flavor::Full;
  const GradedOperator x = act_->operator_matrix(Letter::X, d);
  const GradedOperator g = act_->operator_matrix(Letter::G, d);
  const std::size_t N = x.basis.size();
  Matrix stacked(2 * N, N);
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) {
      stacked(r, c) = x.matrix(r, c);
      stacked(N + r, c) = g.matrix(r, c) - (r == c ? CycNum(1L) : CycNum());
    }
  for (const Vec& v : nullspace(stacked)) out.vectors.push_back(from_coords(x.basis, v));
  return out;
}

std::vector<InvariantBasis> InvariantEngine::invariants_up_to(int max_degree, Flavor f, unsigned workers) const {
  std::vector<InvariantBasis> out(static_cast<std::size_t>(std::max(0, max_degree + 1)));
  workers = resolve_workers(workers, out.size());
  // Large degrees first so the longest jobs start early.
  std::atomic<int> next{max_degree};
  auto work = [&] {
    for (int d; (d = next.fetch_sub(1)) >= 0;) out[d] = invariants(d, f);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

InvariantBasis x_invariants(const ActionSpec& spec, int d) { return InvariantEngine(spec).x_invariants(d); }
InvariantBasis full_invariants(const ActionSpec& spec, int d) { return InvariantEngine(spec).full_invariants(d); }

// ---------------------------------------------------------------------------
// Generators

std::vector<int> GeneratorReport::degrees() const {
  std::vector<int> out;
  for (const auto& [d, e] : generators) out.push_back(d);
  return out;
}

bool GeneratorReport::ok() const {
  for (const auto& c : relation_checks)
    if (!c.passed) return false;
  for (const auto& r : dimension_table)
    if (r.computed != r.predicted) return false;
  return true;
}

GeneratorReport find_generators(const ActionSpec& spec, int max_degree, Flavor flavor) {
  const InvariantEngine eng(spec);
  const DownUp& alg = eng.algebra();
  GeneratorReport rep;
  rep.flavor = flavor;
  rep.max_degree = max_degree;

  const std::vector<std::size_t> predicted =
      flavor == Flavor::Full ? series_dims(molien(spec), max_degree) : series_dims(trace_series_Ax(spec, 0), max_degree);
  const auto inv = eng.invariants_up_to(max_degree, flavor);

  // span_basis[d]: a basis of the degree-d part of the subalgebra generated so far
  std::vector<std::vector<PBWElement>> span_basis(static_cast<std::size_t>(max_degree) + 1);
  span_basis[0].push_back(PBWElement(CycNum(1L)));
  for (int d = 1; d <= max_degree; ++d) {
    SpanBuilder sb(graded_basis(d).size());
    for (const auto& [gd, gen] : rep.generators)
      for (const PBWElement& b : span_basis[d - gd]) {
        const PBWElement prod = alg.mul(gen, b);
        if (sb.insert(coordinates(prod, d))) span_basis[d].push_back(prod);
      }
    for (const PBWElement& v : inv[d].vectors)
      if (sb.insert(coordinates(v, d))) {
        rep.generators.emplace_back(d, v);
        span_basis[d].push_back(v);
      }
    rep.dimension_table.push_back({d, inv[d].dim(), predicted[d]});
    NamedCheck c;
    c.name = "products of generators span degree " + std::to_string(d);
    c.passed = sb.rank() == inv[d].dim();
    if (!c.passed) c.detail = "span rank " + std::to_string(sb.rank()) + " vs dim " + std::to_string(inv[d].dim());
    rep.relation_checks.push_back(std::move(c));
  }
  return rep;
}

std::string to_json(const GeneratorReport& r, int indent) {
  nlohmann::json j;
  j["flavor"] = to_string(r.flavor);
  j["max_degree"] = r.max_degree;
  j["degrees"] = r.degrees();
  auto& gens = j["generators"] = nlohmann::json::array();
  for (const auto& [d, e] : r.generators) gens.push_back({{"degree", d}, {"element", to_string(e)}, {"pbw", serialize(e)}});
  auto& dims = j["dimension_table"] = nlohmann::json::array();
  for (const auto& row : r.dimension_table)
    dims.push_back({{"degree", row.degree}, {"computed", row.computed}, {"predicted", row.predicted}});
  auto& checks = j["relation_checks"] = nlohmann::json::array();
  for (const auto& c : r.relation_checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["ok"] = r.ok();
  return j.dump(indent);
}

// ---------------------------------------------------------------------------
// Presentations

bool PresentationReport::ok() const { return !first_failure().has_value(); }

std::optional<NamedCheck> PresentationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c;
  for (const auto& r : dimension_table)
    if (r.computed != r.predicted)
      return NamedCheck{"monomial count in degree " + std::to_string(r.degree), false,
                        "dim A^x = " + std::to_string(r.computed) + ", monomials = " + std::to_string(r.predicted)};
  return std::nullopt;
}

PBWElement element_a(const InvariantEngine& eng) {
  const int n = eng.spec().n;
  return eng.action().iterated_x(n - 1, PBWElement::monomial(0, 0, 2 * n - 1));
}

CycNum closed_scalar_product(const InvariantEngine& eng) {
  const ActionSpec& s = eng.spec();
  CycNum p(1L);
  for (int i = 1; i < s.n; ++i) p *= s.omega_pow(static_cast<long long>(i - 1) * (2 * s.k + 1)) * eng.action().mu(2 * i);
  return p;
}

CycNum closed_scalar_printed(const InvariantEngine& eng) {
  const ActionSpec& s = eng.spec();
  const long long n = s.n;
  const long long k = s.k;
  const CycNum sinv = s.zeta_pow(-static_cast<long long>(s.sqrt_exp));
  CycNum p = s.omega_pow(n * (n - 1) / 2 * (2 * k + 1) + k * (n - 1));
  for (int i = 1; i < s.n; ++i) p *= gauss_binomial(2 * i, 2, sinv);
  return p;
}

PresentationReport verify_presentation(const ActionSpec& spec, int max_degree) {
  const InvariantEngine eng(spec);
  const DownUp& alg = eng.algebra();
  const TaftAction& act = eng.action();
  const int n = spec.n;
  const long long k = spec.k;
  PresentationReport rep;
  rep.order_n = spec.order_n();
  rep.max_degree = max_degree;

  const PBWElement U = PBWElement::monomial(1, 0, 0);
  const PBWElement Z = PBWElement::monomial(0, 1, 0);
  const CycNum eps = alg.eps();
  auto& checks = rep.checks;

  // generators and their degrees; the a-slot is used only in the order-2n regime
  const int vp = rep.order_n ? n : 2 * n;
  const PBWElement D = PBWElement::monomial(0, 0, vp);
  checks.push_back(identity("v^" + std::to_string(vp) + " u = u v^" + std::to_string(vp), alg.mul(D, U), alg.mul(U, D)));
  checks.push_back(identity("z u = w^-(k+1) sqrt(w) u z", alg.mul(Z, U), eps * alg.mul(U, Z)));
  checks.push_back(identity("v^" + std::to_string(vp) + " z = z v^" + std::to_string(vp), alg.mul(D, Z), alg.mul(Z, D)));

  PBWElement A;
  if (!rep.order_n) {
    A = element_a(eng);
    checks.push_back(identity("a is x-invariant", act.act_x(A), PBWElement()));
    checks.push_back(identity("v^(2n) a = a v^(2n)", alg.mul(D, A), alg.mul(A, D)));
    checks.push_back(identity("a z = w^-(k+1) sqrt(w) z a", alg.mul(A, Z), eps * alg.mul(Z, A)));

    const PBWElement xv = act.iterated_x(n - 1, PBWElement::monomial(0, 0, 2 * n - 2));
    const CycNum s_prod = closed_scalar_product(eng);
    const CycNum s_printed = closed_scalar_printed(eng);
    checks.push_back(identity("x^(n-1).v^(2n-2) = prod w^((i-1)(2k+1)) mu_(2i) z^(n-1)", xv,
                              PBWElement::monomial(0, n - 1, 0, s_prod)));
    checks.push_back(identity("x^(n-1).v^(2n-2) = w^(n(n-1)(2k+1)/2 + k(n-1)) prod [2i 2] z^(n-1)", xv,
                              PBWElement::monomial(0, n - 1, 0, s_printed)));
    const PBWElement comm = alg.mul(A, U) - alg.mul(U, A);
    checks.push_back(identity("au - ua = -sqrt(w) prod w^((i-1)(2k+1)) mu_(2i) z^n", comm,
                              PBWElement::monomial(0, n, 0, -(spec.sqrt_omega * s_prod))));
    checks.push_back(identity("au - ua = -w^(n(n-1)(2k+1)/2 + k(n-1)) sqrt(w) prod [2i 2] z^n", comm,
                              PBWElement::monomial(0, n, 0, -(spec.sqrt_omega * s_printed))));
    CycNum lam(1L);
    for (int m = 1; m < n; ++m) lam *= act.lambda(m);
    checks.push_back(identity("a^2 = w^(2(k+1)) (prod lambda_m)^2 u^(2n-2) v^(2n)", alg.mul(A, A),
                              PBWElement::monomial(2 * n - 2, 0, 2 * n, spec.omega_pow(2 * (k + 1)) * lam * lam)));
  }

  // ordered monomials a^e u^j z^l d^m of degree <= max_degree
  bool all_invariant = true;
  bool all_independent = true;
  std::string bad;
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<PBWElement> monos;
    for (int e = 0; e <= (rep.order_n ? 0 : 1); ++e) {
      const int rest0 = d - e * (2 * n - 1);
      for (int m = 0; m * vp <= rest0; ++m)
        for (int l = 0; 2 * l + m * vp <= rest0; ++l) {
          const int j = rest0 - 2 * l - m * vp;
          const PBWElement tail = PBWElement::monomial(j, l, m * vp);
          monos.push_back(e ? alg.mul(A, tail) : tail);
        }
    }
    SpanBuilder sb(graded_basis(d).size());
    for (const PBWElement& p : monos) {
      if (!act.act_x(p).is_zero() && all_invariant) {
        all_invariant = false;
        bad = to_string(p);
      }
      if (!sb.insert(coordinates(p, d))) all_independent = false;
    }
    rep.dimension_table.push_back({d, eng.x_invariants(d).dim(), monos.size()});
  }
  checks.push_back({"ordered monomials are x-invariant", all_invariant, bad.empty() ? "" : "x acts nontrivially on " + bad});
  checks.push_back({"ordered monomials are linearly independent", all_independent, ""});
  return rep;
}

// ---------------------------------------------------------------------------
// Commutativity

CommutativityReport commutativity_report(const ActionSpec& spec, int max_degree) {
  const InvariantEngine eng(spec);
  const DownUp& alg = eng.algebra();
  CommutativityReport rep;
  const int n = spec.n;
  const int k = spec.k;
  if (!spec.order_n()) {
    const PBWElement b = PBWElement::monomial(2 * k + 1, n - k - 1, 0);
    const PBWElement c = PBWElement::monomial(0, n, 0);
    if (b.max_degree() <= max_degree && c.max_degree() <= max_degree && !(alg.mul(b, c) == alg.mul(c, b))) {
      rep.commutative = false;
      rep.witness.emplace(b, c);
      return rep;
    }
  }
  const auto inv = eng.invariants_up_to(max_degree, Flavor::Full);
  for (int d1 = 1; 2 * d1 <= max_degree; ++d1)
    for (int d2 = d1; d1 + d2 <= max_degree; ++d2)
      for (const PBWElement& p : inv[d1].vectors)
        for (const PBWElement& q : inv[d2].vectors)
          if (!(alg.mul(p, q) == alg.mul(q, p))) {
            rep.commutative = false;
            rep.witness.emplace(p, q);
            return rep;
          }
  return rep;
}

}  // namespace taftinv
