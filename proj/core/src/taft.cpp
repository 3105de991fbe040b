#include "taftinv/taft.hpp"

#include <map>

namespace taftinv {

std::vector<Monomial> bidegree_basis(int p, int q) {
  std::vector<Monomial> out;
  if (p < 0 || q < 0) return out;
  for (int j = 0; j <= std::min(p, q); ++j) out.push_back({p - j, j, q - j});
  return out;
}

TaftAction::TaftAction(const DownUp& algebra) : alg_(algebra) {}

int TaftAction::g_exponent(const Monomial& m) const {
  const long long k = spec().k;
  const long long e = (k + 1) * m.i + (2 * k + 1) * m.j + k * m.l;
  const long long n = spec().n;
  return static_cast<int>(((e % n) + n) % n);
}

CycNum TaftAction::g_eigenvalue(const Monomial& m) const { return spec().omega_pow(g_exponent(m)); }

void TaftAction::grow(int m) const {
  const ActionSpec& s = spec();
  std::lock_guard lock(mu_);
  if (static_cast<int>(lambda_.size()) > m) return;
  const CycNum winv = s.omega_pow(-1);
  const CycNum sinv = s.zeta_pow(-s.sqrt_exp);
  const CycNum wk = s.omega_pow(s.k);
  for (int t = static_cast<int>(lambda_.size()); t <= m; ++t) {
    lambda_.push_back(gauss_binomial(t, 1, winv));
    mu_vals_.push_back(wk * gauss_binomial(t, 2, sinv));
  }
}

CycNum TaftAction::lambda(int m) const {
  grow(m);
  std::lock_guard lock(mu_);
  return lambda_[m];
}

CycNum TaftAction::mu(int m) const {
  grow(m);
  std::lock_guard lock(mu_);
  return mu_vals_[m];
}

PBWElement TaftAction::act_g(const PBWElement& e) const {
  PBWElement r;
  for (const auto& [m, c] : e.terms()) r.add(m, g_eigenvalue(m) * c);
  return r;
}

PBWElement TaftAction::act_x(const Monomial& m) const {
  PBWElement r;
  if (m.l == 0) return r;
  const ActionSpec& s = spec();
  const long long k = s.k;
  const CycNum pre = s.q * s.omega_pow((k + 1) * m.i + (2 * k + 1) * m.j);
  // u^i z^j u v^(l-1) = eps^j u^(i+1) z^j v^(l-1)
  r.add({m.i + 1, m.j, m.l - 1}, pre * alg_.eps_pow(m.j) * lambda(m.l));
  if (m.l >= 2) r.add({m.i, m.j + 1, m.l - 2}, pre * mu(m.l));
  return r;
}

PBWElement TaftAction::act_x(const PBWElement& e) const {
  PBWElement r;
  for (const auto& [m, c] : e.terms()) {
    const PBWElement img = act_x(m);
    for (const auto& [m2, c2] : img.terms()) r.add(m2, c * c2);
  }
  return r;
}

// x(a_1 ... a_m) = sum_i g(a_1 ... a_(i-1)) x(a_i) a_(i+1) ... a_m over the
// letters of u^i z^j v^l, with x.z expanded from z = vu - omega^-(k+1) uv.
PBWElement TaftAction::act_x_recursive(const PBWElement& e) const {
  const ActionSpec& s = spec();
  const PBWElement U = PBWElement::monomial(1, 0, 0);
  const PBWElement V = PBWElement::monomial(0, 0, 1);
  const PBWElement Z = PBWElement::monomial(0, 1, 0);
  const CycNum gu = s.omega_pow(s.k + 1);
  const CycNum gv = s.omega_pow(s.k);
  const PBWElement xu;
  const PBWElement xv = s.q * U;
  // x(vu) = g(v) x(u) + x(v) u,  x(uv) = g(u) x(v) + x(u) v
  const PBWElement xvu = alg_.mul(gv * V, xu) + alg_.mul(xv, U);
  const PBWElement xuv = alg_.mul(gu * U, xv) + alg_.mul(xu, V);
  const PBWElement xz = xvu - alg_.c() * xuv;
  const CycNum gz = gu * gv;

  PBWElement out;
  for (const auto& [m, c] : e.terms()) {
    std::string word = std::string(m.i, 'u') + std::string(m.j, 'z') + std::string(m.l, 'v');
    PBWElement prefix(CycNum(1L));  // g applied to the letters already passed
    for (std::size_t t = 0; t < word.size(); ++t) {
      const char ch = word[t];
      const PBWElement& xa = ch == 'u' ? xu : ch == 'v' ? xv : xz;
      if (!xa.is_zero()) {
        Monomial rest{0, 0, 0};
        for (std::size_t r = t + 1; r < word.size(); ++r) (word[r] == 'u' ? rest.i : word[r] == 'z' ? rest.j : rest.l)++;
        out += c * alg_.mul(alg_.mul(prefix, xa), PBWElement::monomial(rest));
      }
      const PBWElement& letter = ch == 'u' ? U : ch == 'v' ? V : Z;
      const CycNum& gl = ch == 'u' ? gu : ch == 'v' ? gv : gz;
      prefix = alg_.mul(prefix, gl * letter);
    }
  }
  return out;
}

PBWElement TaftAction::iterated_x(int m, const PBWElement& e) const {
  PBWElement r = e;
  for (int t = 0; t < m && !r.is_zero(); ++t) r = act_x(r);
  return r;
}

GradedOperator TaftAction::operator_matrix(Letter which, int d) const {
  GradedOperator op;
  op.degree = d;
  op.label = which;
  op.basis = graded_basis(d);
  const std::size_t N = op.basis.size();
  std::map<Monomial, std::size_t> index;
  for (std::size_t c = 0; c < N; ++c) index[op.basis[c]] = c;
  op.matrix = Matrix(N, N);
  for (std::size_t c = 0; c < N; ++c) {
    const Monomial& m = op.basis[c];
    if (which == Letter::G) {
      op.matrix(c, c) = g_eigenvalue(m);
      continue;
    }
    const PBWElement img = act_x(m);
    for (const auto& [m2, v] : img.terms()) op.matrix(index.at(m2), c) = v;
  }
  return op;
}

Matrix TaftAction::x_block(int p, int q) const {
  const auto src = bidegree_basis(p, q);
  const auto dst = bidegree_basis(p + 1, q - 1);
  Matrix M(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    const PBWElement img = act_x(src[c]);
    for (const auto& [m2, v] : img.terms()) M(static_cast<std::size_t>(m2.j), c) = v;
  }
  return M;
}

PBWElement act_g(const ActionSpec& spec, const PBWElement& e) {
  DownUp alg(spec);
  return TaftAction(alg).act_g(e);
}

PBWElement act_x(const ActionSpec& spec, const PBWElement& e) {
  DownUp alg(spec);
  return TaftAction(alg).act_x(e);
}

PBWElement act_x_recursive(const ActionSpec& spec, const PBWElement& e) {
  DownUp alg(spec);
  return TaftAction(alg).act_x_recursive(e);
}

PBWElement iterated_x(const ActionSpec& spec, int m, const PBWElement& e) {
  DownUp alg(spec);
  return TaftAction(alg).iterated_x(m, e);
}

GradedOperator operator_matrix(const ActionSpec& spec, Letter which, int d) {
  DownUp alg(spec);
  return TaftAction(alg).operator_matrix(which, d);
}

}  // namespace taftinv
