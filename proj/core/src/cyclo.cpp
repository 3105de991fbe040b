#include "taftinv/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace taftinv {

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

IntPoly compute_cyclotomic(int N) {
  // t^N - 1
  IntPoly num(static_cast<std::size_t>(N) + 1, 0);
  num[0] = -1;
  num[N] = 1;
  for (int d : divisors(N)) {
    if (d == N) continue;
    const IntPoly& den = cyclotomic_polynomial(d);
    // Exact division by a monic integer polynomial.
    const std::size_t dd = den.size() - 1;
    IntPoly quo(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      mpz_class f = num[i];
      if (f == 0) continue;
      quo[i - dd] = f;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= f * den[j];
    }
    for (std::size_t i = 0; i < dd; ++i)
      if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
    num = std::move(quo);
  }
  return num;
}

}  // namespace

std::vector<int> divisors(int N) {
  std::vector<int> out;
  for (int d = 1; d * d <= N; ++d) {
    if (N % d) continue;
    out.push_back(d);
    if (d * d != N) out.push_back(N / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int euler_phi(int N) {
  int result = N;
  int m = N;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const IntPoly& cyclotomic_polynomial(int N) {
  if (N < 1) throw std::invalid_argument("cyclotomic_polynomial: N must be >= 1");
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(registry_mutex());
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
  }
  IntPoly p;
  if (N == 1) {
    p = {-1, 1};
  } else {
    p = compute_cyclotomic(N);
  }
  std::lock_guard lock(registry_mutex());
  return cache.emplace(N, std::move(p)).first->second;
}

CycloField::CycloField(int level) : level_(level) {
  phi_ = cyclotomic_polynomial(level);
  degree_ = static_cast<int>(phi_.size()) - 1;
  for (int i = 0; i < degree_; ++i)
    if (phi_[i] != 0) tail_.emplace_back(i, phi_[i]);
}

std::shared_ptr<const CycloField> CycloField::get(int level) {
  if (level < 1) throw std::invalid_argument("cyclotomic level must be >= 1");
  // Built outside the lock: cyclotomic_polynomial takes the same mutex.
  static std::map<int, std::shared_ptr<const CycloField>> fields;
  {
    std::lock_guard lock(registry_mutex());
    auto it = fields.find(level);
    if (it != fields.end()) return it->second;
  }
  auto f = std::make_shared<const CycloField>(level);
  std::lock_guard lock(registry_mutex());
  return fields.emplace(level, std::move(f)).first->second;
}

// ---------------------------------------------------------------------------

CycNum::CycNum() : CycNum(Rational(0)) {}
CycNum::CycNum(long v) : CycNum(Rational(v)) {}
CycNum::CycNum(const Rational& v) : field_(CycloField::get(1)), c_{v} {}

CycNum::CycNum(std::shared_ptr<const CycloField> f, std::vector<Rational> c)
    : field_(std::move(f)), c_(std::move(c)) {}

CycNum CycNum::primitive_root(int N) { return root(N, 1); }

CycNum CycNum::root(int N, long long e) {
  auto f = CycloField::get(N);
  e %= N;
  if (e < 0) e += N;
  const int deg = f->degree();
  if (e < deg) {
    std::vector<Rational> c(deg, 0);
    c[e] = 1;
    return CycNum(f, std::move(c));
  }
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1, 0);
  c[e] = 1;
  return from_coeffs(N, std::move(c));
}

CycNum CycNum::from_coeffs(int N, std::vector<Rational> coeffs) {
  auto f = CycloField::get(N);
  const int deg = f->degree();
  // Reduce modulo the monic Phi_N from the top down.
  for (std::size_t i = coeffs.size(); i-- > static_cast<std::size_t>(deg);) {
    if (sgn(coeffs[i]) == 0) continue;
    Rational lead = coeffs[i];
    const std::size_t base = i - deg;
    for (const auto& [j, p] : f->sparse_tail()) coeffs[base + j] -= lead * p;
    coeffs[i] = 0;
  }
  coeffs.resize(deg, 0);
  return CycNum(std::move(f), std::move(coeffs));
}

int CycNum::level() const { return field_->level(); }

bool CycNum::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool CycNum::is_one() const { return is_rational() && c_[0] == 1; }

Rational CycNum::rational_value() const {
  if (!is_rational()) throw std::domain_error("CycNum is not rational");
  return c_[0];
}

void CycNum::embed_into(const std::shared_ptr<const CycloField>& f) {
  std::vector<Rational> c(f->degree(), 0);
  c[0] = c_[0];
  field_ = f;
  c_ = std::move(c);
}

void CycNum::unify(CycNum& other) {
  if (field_ == other.field_) return;
  if (level() == 1) {
    embed_into(other.field_);
  } else if (other.level() == 1) {
    other.embed_into(field_);
  } else {
    throw std::invalid_argument("CycNum level mismatch: " + std::to_string(level()) + " vs " +
                                std::to_string(other.level()));
  }
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (field_ != o.field_) {
    CycNum b = o;
    unify(b);
    return *this += b;
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  if (field_ != o.field_) {
    CycNum b = o;
    unify(b);
    return *this -= b;
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum operator-(CycNum a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.level() == 1) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (level() == 1) {
    Rational s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    return *this;
  }
  if (field_ != o.field_) {
    CycNum b = o;
    unify(b);
    return *this *= b;
  }
  const std::size_t n = c_.size();
  std::vector<Rational> prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(o.c_[j]) == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  *this = from_coeffs(level(), std::move(prod));
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycNum: inverse of zero");
  if (level() == 1) return CycNum(Rational(1) / c_[0]);
  QPoly a(c_);
  std::vector<Rational> m(field_->modulus().begin(), field_->modulus().end());
  QPoly mod{std::move(m)};
  auto [g, s] = gcd_ext_left(a, mod);
  if (g.degree() != 0) throw std::logic_error("CycNum: non-invertible residue");
  std::vector<Rational> c = s.coeffs();
  return from_coeffs(level(), std::move(c));
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inverse(); }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.field_ == b.field_) return a.c_ == b.c_;
  if (a.level() == 1 || b.level() == 1) {
    const CycNum& r = a.level() == 1 ? a : b;
    const CycNum& o = a.level() == 1 ? b : a;
    return o.is_rational() && o.c_[0] == r.c_[0];
  }
  return false;
}

CycNum CycNum::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(1L);
  CycNum base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string CycNum::to_string(const std::string& symbol) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << symbol;
    if (i > 1) os << "^" << i;
  }
  if (first) return "0";
  return os.str();
}

std::optional<int> order_of(const CycNum& c) {
  if (c.is_zero()) throw std::domain_error("order_of: zero has no multiplicative order");
  const int L = std::lcm(2, c.level());
  if (!c.pow(L).is_one()) return std::nullopt;
  for (int m : divisors(L))
    if (c.pow(m).is_one()) return m;
  return std::nullopt;
}

CycNum gauss_binomial(int m, int r, const CycNum& q) {
  if (m < 0 || r < 0) throw std::invalid_argument("gauss_binomial: negative argument");
  if (r == 0) return CycNum(1L);
  if (r > m) return CycNum(0L);
  std::vector<CycNum> qpow(static_cast<std::size_t>(m) + 1);
  qpow[0] = CycNum(1L);
  for (int i = 1; i <= m; ++i) qpow[i] = qpow[i - 1] * q;
  // row[j] = [row_m choose j]_q
  std::vector<CycNum> row(static_cast<std::size_t>(r) + 1, CycNum(0L));
  row[0] = CycNum(1L);
  for (int mm = 1; mm <= m; ++mm) {
    for (int j = std::min(mm, r); j >= 1; --j) row[j] += qpow[mm - j] * row[j - 1];
  }
  return row[r];
}

// ---------------------------------------------------------------------------

RootOfUnity::RootOfUnity(long long exponent, long long order) {
  if (order < 1) throw std::invalid_argument("RootOfUnity: order must be >= 1");
  exponent %= order;
  if (exponent < 0) exponent += order;
  long long g = std::gcd(exponent, order);
  if (exponent == 0) g = order;
  exponent_ = exponent / g;
  order_ = order / g;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  long long L = std::lcm(order_, o.order_);
  return RootOfUnity(exponent_ * (L / order_) + o.exponent_ * (L / o.order_), L);
}

RootOfUnity RootOfUnity::inverse() const { return RootOfUnity(-exponent_, order_); }

RootOfUnity RootOfUnity::pow(long long e) const {
  long long x = (e % order_) * exponent_ % order_;
  return RootOfUnity(x, order_);
}

bool RootOfUnity::is_power_of(const RootOfUnity& base) const {
  return base.order_ % order_ == 0;
}

long long RootOfUnity::log_base(const RootOfUnity& base) const {
  if (!is_power_of(base)) throw std::invalid_argument("RootOfUnity: not a power of the base");
  for (long long j = 0; j < base.order_; ++j)
    if (base.pow(j) == *this) return j;
  throw std::logic_error("RootOfUnity: discrete log not found");
}

CycNum RootOfUnity::embed(int level) const {
  if (level % order_ != 0)
    throw std::invalid_argument("RootOfUnity: order " + std::to_string(order_) +
                                " does not divide level " + std::to_string(level));
  return CycNum::root(level, exponent_ * (level / order_));
}

}  // namespace taftinv
