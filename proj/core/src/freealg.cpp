#include "taftinv/freealg.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "taftinv/linalg.hpp"

namespace taftinv {

// ---------------------------------------------------------------------------
// FreeElement

FreeElement FreeElement::word(const std::string& w, const CycNum& c) {
  FreeElement e;
  e.add(w, c);
  return e;
}

CycNum FreeElement::coeff(const std::string& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? CycNum() : it->second;
}

void FreeElement::add(const std::string& w, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FreeElement operator*(const CycNum& s, const FreeElement& a) {
  FreeElement r;
  if (s.is_zero()) return r;
  for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, s * c);
  return r;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  FreeElement r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add(wa + wb, ca * cb);
  return r;
}

bool operator==(const FreeElement& a, const FreeElement& b) { return a.terms_ == b.terms_; }

std::string FreeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (!w.empty()) os << "*" << w;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// 2x2 matrices

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

Mat2 mat2_scale(const CycNum& s, const Mat2& a) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = s * a[i][j];
  return r;
}

Mat2 mat2_identity() {
  Mat2 r;
  r[0][0] = CycNum(1L);
  r[1][1] = CycNum(1L);
  return r;
}

bool mat2_is_zero(const Mat2& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

namespace {

Mat2 mat2_pow(const Mat2& a, int e) {
  Mat2 r = mat2_identity();
  for (int i = 0; i < e; ++i) r = mat2_mul(r, a);
  return r;
}

std::string mat2_string(const Mat2& a) {
  std::ostringstream os;
  os << "[[" << a[0][0].to_string() << ", " << a[0][1].to_string() << "], [" << a[1][0].to_string() << ", "
     << a[1][1].to_string() << "]]";
  return os.str();
}

int mod(long long a, long long m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

// ---------------------------------------------------------------------------
// ActionSpec

std::string to_string(SqrtChoice c) { return c == SqrtChoice::Principal ? "principal" : "alt"; }

std::optional<SqrtChoice> parse_sqrt_choice(const std::string& s) {
  if (s == "principal") return SqrtChoice::Principal;
  if (s == "alt" || s == "alternate") return SqrtChoice::Alternate;
  return std::nullopt;
}

CycNum ActionSpec::zeta_pow(long long e) const {
  const int L = level();
  const int r = mod(e, L);
  if (zeta_table) return (*zeta_table)[r];
  return CycNum::root(L, r);
}

std::string ActionSpec::describe() const {
  std::ostringstream os;
  os << "n=" << n << " k=" << k << " case=" << static_cast<int>(family) << " sqrt=" << to_string(sqrt_choice)
     << " order=" << sqrt_order << " alpha=" << alpha.to_string() << " beta=" << beta.to_string();
  return os.str();
}

ActionSpec make_spec(int n, int k, Family family, SqrtChoice choice, const CycNum& q, int omega_unit) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (k < 0 || k >= n) throw std::invalid_argument("k must satisfy 0 <= k < n");
  if (q.is_zero()) throw std::invalid_argument("the scale q must be nonzero");
  const int j = mod(omega_unit, n);
  if (std::gcd(j, n) != 1) throw std::invalid_argument("omega_unit must be coprime to n");

  ActionSpec s;
  s.n = n;
  s.k = k;
  s.family = family;
  s.sqrt_choice = choice;
  s.q = q;
  s.omega_unit = j;

  const int L = 2 * n;
  auto table = std::make_shared<std::vector<CycNum>>();
  table->reserve(L);
  for (int e = 0; e < L; ++e) table->push_back(CycNum::root(L, e));
  s.zeta_table = table;

  s.zeta = s.zeta_pow(1);
  s.omega_exp = mod(2LL * j, L);
  s.omega = s.zeta_pow(s.omega_exp);
  const int shift = choice == SqrtChoice::Principal ? 0 : n;
  const CycNum one(1L);
  if (family == Family::Case1) {
    s.sqrt_exp = mod(j + shift, L);
    s.sqrt_omega = s.zeta_pow(s.sqrt_exp);
    s.alpha = s.omega_pow(-(k + 1)) * (one + s.sqrt_omega);
    s.beta = -(s.omega_pow(-2 * (k + 1)) * s.sqrt_omega);
    s.eps_k = s.omega_pow(-(k + 1)) * s.sqrt_omega;
  } else {
    s.sqrt_exp = mod(-j + shift, L);
    s.sqrt_omega = s.zeta_pow(s.sqrt_exp);
    s.alpha = s.omega_pow(k + 1) * (one + s.sqrt_omega);
    s.beta = -(s.omega_pow(2 * (k + 1)) * s.sqrt_omega);
    s.eps_k = s.omega_pow(-(k + 1)) * s.zeta_pow(-s.sqrt_exp);
  }
  s.sqrt_order = L / std::gcd(s.sqrt_exp, L);
  return s;
}

TaftPair to_taft_pair(const ActionSpec& spec) {
  TaftPair p;
  p.n = spec.n;
  p.omega = spec.omega;
  if (spec.family == Family::Case1) {
    p.gmat[0][0] = spec.omega_pow(spec.k + 1);
    p.gmat[1][1] = spec.omega_pow(spec.k);
    p.xmat[0][1] = spec.q;
  } else {
    p.gmat[0][0] = spec.omega_pow(spec.k);
    p.gmat[1][1] = spec.omega_pow(spec.k + 1);
    p.xmat[1][0] = spec.q;
  }
  return p;
}

ActionSpec normalize_to_case1(const ActionSpec& spec) {
  if (spec.family == Family::Case1) return spec;
  return make_spec(spec.n, spec.k, Family::Case1, spec.sqrt_choice, spec.q, spec.omega_unit);
}

// ---------------------------------------------------------------------------
// The action on k<u, v>

namespace {

const char kLetters[2] = {'u', 'v'};

int letter_index(char c) {
  if (c == 'u') return 0;
  if (c == 'v') return 1;
  throw std::invalid_argument(std::string("free algebra: unknown letter '") + c + "'");
}

FreeElement image(const Mat2& m, char letter) {
  const int c = letter_index(letter);
  FreeElement r;
  for (int row = 0; row < 2; ++row) r.add(std::string(1, kLetters[row]), m[row][c]);
  return r;
}

FreeElement act_g_word(const TaftPair& p, const std::string& w) {
  FreeElement r = FreeElement::word("");
  for (char c : w) r = r * image(p.gmat, c);
  return r;
}

// x(a_1 ... a_m) = sum_i g(a_1) ... g(a_{i-1}) x(a_i) a_{i+1} ... a_m
FreeElement act_x_word(const TaftPair& p, const std::string& w) {
  FreeElement r;
  FreeElement prefix = FreeElement::word("");
  for (std::size_t i = 0; i < w.size(); ++i) {
    r += prefix * image(p.xmat, w[i]) * FreeElement::word(w.substr(i + 1));
    prefix = prefix * image(p.gmat, w[i]);
  }
  return r;
}

}  // namespace

FreeElement act_free(const TaftPair& pair, Letter which, const FreeElement& e) {
  FreeElement r;
  for (const auto& [w, c] : e.terms()) {
    FreeElement part = which == Letter::G ? act_g_word(pair, w) : act_x_word(pair, w);
    r += c * part;
  }
  return r;
}

std::array<FreeElement, 2> downup_relations(const CycNum& alpha, const CycNum& beta) {
  FreeElement r1 = FreeElement::word("vvu");
  r1.add("vuv", -alpha);
  r1.add("uvv", -beta);
  FreeElement r2 = FreeElement::word("vuu");
  r2.add("uvu", -alpha);
  r2.add("uuv", -beta);
  return {r1, r2};
}

namespace {

std::vector<std::string> words_of_length(int len) {
  std::vector<std::string> out{""};
  for (int i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out)
      for (char c : kLetters) next.push_back(w + c);
    out = std::move(next);
  }
  return out;
}

Vec coordinates(const FreeElement& e, const std::vector<std::string>& words) {
  Vec v;
  v.reserve(words.size());
  for (const auto& w : words) v.push_back(e.coeff(w));
  for (const auto& [w, c] : e.terms())
    if (w.size() != 3) throw std::logic_error("relation image is not homogeneous of degree 3");
  return v;
}

}  // namespace

ValidityReport is_valid_action(const TaftPair& pair, const CycNum& alpha, const CycNum& beta) {
  if (beta.is_zero()) throw std::invalid_argument("beta = 0: the down-up algebra is not noetherian");
  ValidityReport rep;
  auto fail = [&](std::string what, std::string detail) {
    rep.valid = false;
    rep.failed = std::move(what);
    rep.detail = std::move(detail);
    return rep;
  };

  const Mat2 I = mat2_identity();
  const Mat2& g = pair.gmat;
  const Mat2& x = pair.xmat;

  const auto om_order = pair.omega.is_zero() ? std::optional<int>() : order_of(pair.omega);
  if (!om_order || *om_order != pair.n)
    return fail("g_order", "omega is not a primitive " + std::to_string(pair.n) + "th root of unity");
  if (mat2_pow(g, pair.n) != I) return fail("g_order", "g^n != 1, g = " + mat2_string(g));
  for (int d : divisors(pair.n)) {
    if (d == pair.n) continue;
    if (mat2_pow(g, d) == I) return fail("g_order", "g^" + std::to_string(d) + " = 1, order below n");
  }
  if (!mat2_is_zero(mat2_mul(x, x))) return fail("x_square", "x^2 != 0, x = " + mat2_string(x));
  const Mat2 gx = mat2_mul(g, x);
  const Mat2 wxg = mat2_scale(pair.omega, mat2_mul(x, g));
  if (gx != wxg) return fail("skew_commutation", "gx = " + mat2_string(gx) + " but omega xg = " + mat2_string(wxg));
  if (mat2_is_zero(x)) return fail("inner_faithful", "x acts by zero");

  const auto rel = downup_relations(alpha, beta);
  const auto words = words_of_length(3);
  const std::vector<Vec> span{coordinates(rel[0], words), coordinates(rel[1], words)};
  const char* names[2] = {"g", "x"};
  for (int h = 0; h < 2; ++h)
    for (int i = 0; i < 2; ++i) {
      const FreeElement img = act_free(pair, h == 0 ? Letter::G : Letter::X, rel[i]);
      if (!in_span(span, coordinates(img, words)))
        return fail("relation_preservation", std::string(names[h]) + " . r" + std::to_string(i + 1) + " = " +
                                                 img.to_string() + " is not in span{r1, r2}");
    }
  return rep;
}

std::vector<ActionSpec> classify_actions(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  std::vector<ActionSpec> out;
  out.reserve(4 * static_cast<std::size_t>(n));
  for (Family f : {Family::Case1, Family::Case2})
    for (int k = 0; k < n; ++k)
      for (SqrtChoice c : {SqrtChoice::Principal, SqrtChoice::Alternate}) out.push_back(make_spec(n, k, f, c));
  return out;
}

std::pair<RootOfUnity, RootOfUnity> characteristic_roots(const ActionSpec& spec) {
  const long long L = spec.level();
  const long long w = spec.omega_exp;
  if (spec.family == Family::Case1) {
    const long long t1 = -w * (spec.k + 1);
    return {RootOfUnity(t1, L), RootOfUnity(t1 + spec.sqrt_exp, L)};
  }
  const long long t1 = w * (spec.k + 1);
  return {RootOfUnity(t1, L), RootOfUnity(t1 + spec.sqrt_exp, L)};
}

std::vector<ActionSpec> actions_for_downup(const RootOfUnity& g1, const RootOfUnity& g2) {
  std::vector<ActionSpec> out;
  // Orientation (a, b): a is required to be a power of omega = a^-2 b^2.
  auto try_orientation = [&](const RootOfUnity& a, const RootOfUnity& b) {
    const RootOfUnity omega = a.pow(-2) * b.pow(2);
    const int n = static_cast<int>(omega.order());
    if (n < 2 || !a.is_power_of(omega)) return;
    const int L = 2 * n;
    const RootOfUnity ratio = b * a.inverse();  // a square root of omega
    if (L % ratio.order() != 0) return;
    const long long ratio_exp = ratio.exponent() * (L / ratio.order());

    // Case 1 with parameter omega: a = omega^-(k+1), sqrt(omega) = b / a.
    {
      const int j = static_cast<int>(omega.exponent());
      const int k = mod(-a.log_base(omega) - 1, n);
      const SqrtChoice c = mod(ratio_exp - j, L) == 0 ? SqrtChoice::Principal : SqrtChoice::Alternate;
      out.push_back(make_spec(n, k, Family::Case1, c, CycNum(1L), j));
    }
    // Case 2 with parameter omega^-1: a = (omega^-1)^(k+1), sqrt(omega) = b / a.
    {
      const RootOfUnity om2 = omega.inverse();
      const int j2 = static_cast<int>(om2.exponent());
      const int k = mod(a.log_base(om2) - 1, n);
      const SqrtChoice c = mod(ratio_exp + j2, L) == 0 ? SqrtChoice::Principal : SqrtChoice::Alternate;
      out.push_back(make_spec(n, k, Family::Case2, c, CycNum(1L), j2));
    }
  };
  try_orientation(g1, g2);
  if (!(g1 == g2)) try_orientation(g2, g1);
  return out;
}

FreeElement superpotential(const CycNum& alpha, const CycNum& beta) {
  const CycNum binv = beta.inverse();
  FreeElement w = FreeElement::word("uvvu");
  w.add("uvuv", -alpha);
  w.add("uuvv", -beta);
  w.add("vvuu", -binv);
  w.add("vuvu", alpha * binv);
  w.add("vuuv", CycNum(1L));
  return w;
}

SuperpotentialReport superpotential_check(const ActionSpec& spec) {
  const TaftPair p = to_taft_pair(spec);
  const FreeElement w = superpotential(spec.alpha, spec.beta);
  SuperpotentialReport r;
  r.x_annihilates = act_free(p, Letter::X, w).is_zero();
  const FreeElement gw = act_free(p, Letter::G, w);
  const CycNum lambda = gw.coeff("uvvu");
  if (!(gw == lambda * w)) throw std::logic_error("g . w is not a scalar multiple of w: " + gw.to_string());
  r.g_eigenvalue = lambda;
  return r;
}

}  // namespace taftinv
