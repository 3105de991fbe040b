#include "taftinv/downup.hpp"

#include <sstream>

namespace taftinv {

std::vector<Monomial> graded_basis(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; 2 * j <= d - i; ++j) out.push_back({i, j, d - i - 2 * j});
  return out;
}

// ---------------------------------------------------------------------------
// PBWElement

PBWElement::PBWElement(const CycNum& scalar) { add({0, 0, 0}, scalar); }

PBWElement PBWElement::monomial(const Monomial& m, const CycNum& c) {
  PBWElement e;
  e.add(m, c);
  return e;
}

CycNum PBWElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycNum() : it->second;
}

void PBWElement::add(const Monomial& m, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int PBWElement::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool PBWElement::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    if (d >= 0 && m.degree() != d) return false;
    d = m.degree();
  }
  return true;
}

PBWElement PBWElement::component(int d) const {
  PBWElement r;
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace(m, c);
  return r;
}

bool PBWElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

CycNum PBWElement::scalar_value() const { return coeff({0, 0, 0}); }

PBWElement& PBWElement::operator+=(const PBWElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

PBWElement operator*(const CycNum& s, const PBWElement& a) {
  PBWElement r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, s * c);
  return r;
}

namespace {

void append_power(std::ostringstream& os, bool& first, char letter, int e) {
  if (e == 0) return;
  if (!first) os << "*";
  first = false;
  os << letter;
  if (e != 1) os << "^" << e;
}

}  // namespace

std::string to_string(const PBWElement& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [m, c] : e.terms()) {
    if (!first_term) os << " + ";
    first_term = false;
    bool first = true;
    if (!c.is_one() || m == Monomial{}) {
      os << "(" << c.to_string() << ")";
      first = false;
    }
    append_power(os, first, 'u', m.i);
    append_power(os, first, 'z', m.j);
    append_power(os, first, 'v', m.l);
  }
  return os.str();
}

std::string serialize(const PBWElement& e) {
  std::ostringstream os;
  for (const auto& [m, c] : e.terms()) os << m.i << " " << m.j << " " << m.l << " : " << c.to_string() << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// DownUp

DownUp::DownUp(ActionSpec spec) : spec_(std::move(spec)) {
  if (spec_.family != Family::Case1)
    throw std::invalid_argument("down-up normal forms are implemented for case-1 specs; normalize first");
  c_exp_ = -static_cast<long long>(spec_.omega_exp) * (spec_.k + 1);
  eps_exp_ = c_exp_ + spec_.sqrt_exp;
  c_ = spec_.zeta_pow(c_exp_);
  eps_ = spec_.zeta_pow(eps_exp_);
}

DownUp::Row DownUp::vu_block(int m, int i) const {
  {
    std::lock_guard lock(mu_);
    auto it = blocks_.find({m, i});
    if (it != blocks_.end()) return it->second;
  }
  Row r = compute_vu_block(m, i);
  std::lock_guard lock(mu_);
  return blocks_.emplace(std::make_pair(m, i), std::move(r)).first->second;
}

// v^m u^i = c^m u (v^m u^(i-1)) + c^(m-1) [m]_s z (v^(m-1) u^(i-1)), then
// z u^a = eps^a u^a z moves the new z into place.
DownUp::Row DownUp::compute_vu_block(int m, int i) const {
  if (m == 0 || i == 0) return std::make_shared<const std::vector<CycNum>>(1, CycNum(1L));
  const int len = std::min(m, i) + 1;
  std::vector<CycNum> out(len);
  const Row a = vu_block(m, i - 1);
  const CycNum cm = c_pow(m);
  for (std::size_t b = 0; b < a->size(); ++b) out[b] += cm * (*a)[b];
  CycNum qint;
  for (int t = 0; t < m; ++t) qint += spec_.zeta_pow(static_cast<long long>(spec_.sqrt_exp) * t);
  const CycNum f = c_pow(m - 1) * qint;
  if (!f.is_zero()) {
    const Row p = vu_block(m - 1, i - 1);
    for (std::size_t b = 0; b < p->size(); ++b) {
      if ((*p)[b].is_zero()) continue;
      const int nb = static_cast<int>(b) + 1;
      out[nb] += f * eps_pow(i - nb) * (*p)[b];
    }
  }
  return std::make_shared<const std::vector<CycNum>>(std::move(out));
}

PBWElement DownUp::mul(const Monomial& x, const Monomial& y) const {
  PBWElement r;
  const Row blk = vu_block(x.l, y.i);
  for (std::size_t b = 0; b < blk->size(); ++b) {
    const CycNum& coef = (*blk)[b];
    if (coef.is_zero()) continue;
    const int a = y.i - static_cast<int>(b);
    const int c = x.l - static_cast<int>(b);
    const long long e = static_cast<long long>(x.j) * a + static_cast<long long>(c) * y.j;
    r.add({x.i + a, x.j + static_cast<int>(b) + y.j, c + y.l}, eps_pow(e) * coef);
  }
  return r;
}

PBWElement DownUp::mul(const PBWElement& a, const PBWElement& b) const {
  PBWElement r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const CycNum s = ca * cb;
      const PBWElement prod = mul(ma, mb);
      for (const auto& [m, c] : prod.terms()) r.add(m, s * c);
    }
  return r;
}

PBWElement DownUp::pow(const PBWElement& a, int e) const {
  if (e < 0) throw std::invalid_argument("negative power of an algebra element");
  PBWElement r(CycNum(1L));
  for (int t = 0; t < e; ++t) r = mul(r, a);
  return r;
}

PBWElement DownUp::v_power_times_u(int m) const {
  PBWElement r = PBWElement::monomial(1, 0, m, c_pow(m));
  if (m >= 1) {
    CycNum qint;
    for (int t = 0; t < m; ++t) qint += spec_.zeta_pow(static_cast<long long>(spec_.sqrt_exp) * t);
    r.add({0, 1, m - 1}, c_pow(m - 1) * qint);
  }
  return r;
}

PBWElement DownUp::normal_form_word(const std::string& word) const {
  for (char ch : word)
    if (ch != 'u' && ch != 'v' && ch != 'z') throw std::invalid_argument("normal_form_word: letters must be u, v, z");
  auto rank = [](char ch) { return ch == 'u' ? 0 : ch == 'z' ? 1 : 2; };
  std::map<std::string, CycNum> work{{word, CycNum(1L)}};
  PBWElement out;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const std::string& w = node.key();
    const CycNum& coef = node.mapped();
    std::size_t pos = 0;
    while (pos + 1 < w.size() && rank(w[pos]) <= rank(w[pos + 1])) ++pos;
    if (pos + 1 >= w.size()) {
      Monomial m;
      for (char ch : w) (ch == 'u' ? m.i : ch == 'z' ? m.j : m.l)++;
      out.add(m, coef);
      continue;
    }
    const std::string head = w.substr(0, pos);
    const std::string tail = w.substr(pos + 2);
    auto push = [&](const std::string& nw, const CycNum& c) {
      auto [it, ins] = work.try_emplace(nw, c);
      if (!ins) {
        it->second += c;
        if (it->second.is_zero()) work.erase(it);
      }
    };
    const std::string pair = w.substr(pos, 2);
    if (pair == "vu") {
      push(head + "uv" + tail, coef * c_);
      push(head + "z" + tail, coef);
    } else if (pair == "zu") {
      push(head + "uz" + tail, coef * eps_);
    } else {  // "vz"
      push(head + "zv" + tail, coef * eps_);
    }
  }
  return out;
}

PBWElement DownUp::from_free(const FreeElement& e) const {
  PBWElement r;
  for (const auto& [w, c] : e.terms()) {
    PBWElement prod(CycNum(1L));
    for (char ch : w) {
      const Monomial m = ch == 'u' ? Monomial{1, 0, 0} : Monomial{0, 0, 1};
      prod = mul(prod, PBWElement::monomial(m));
    }
    r += c * prod;
  }
  return r;
}

PBWElement pbw_mul(const ActionSpec& spec, const PBWElement& a, const PBWElement& b) {
  return DownUp(spec).mul(a, b);
}

}  // namespace taftinv
