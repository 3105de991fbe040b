#pragma once

// Dense univariate polynomials over an exact field K.
//
// K must provide +, -, *, / and construction from int. Coefficients are stored
// in ascending order with no trailing zeros, so the zero polynomial is the
// empty vector and degree() returns -1 for it.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace taftinv {

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(const K& constant) {  // NOLINT: implicit lift of scalars is intended
    if (!is_zero(constant)) c_.push_back(constant);
  }

  /// c * t^e
  static Poly monomial(const K& c, std::size_t e) {
    if (is_zero(c)) return {};
    std::vector<K> v(e + 1, K(0));
    v[e] = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  const K& leading() const { return c_.back(); }

  /// Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!is_zero(c_[i])) return static_cast<int>(i);
    return -1;
  }

  void set_coeff(std::size_t i, const K& v) {
    if (i >= c_.size()) {
      if (is_zero(v)) return;
      c_.resize(i + 1, K(0));
    }
    c_[i] = v;
    trim();
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const K& s) {
    if (is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Poly operator*(Poly a, const K& s) { return a *= s; }
  friend Poly operator*(const K& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (is_zero(b.c_[j])) continue;
        r[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<K> rem = a.c_;
    std::vector<K> quo(a.c_.size() - b.c_.size() + 1, K(0));
    const K inv_lead = K(1) / b.leading();
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t i = rem.size(); i-- > db;) {
      if (is_zero(rem[i])) continue;
      K f = rem[i] * inv_lead;
      for (std::size_t j = 0; j <= db; ++j) {
        if (is_zero(b.c_[j])) continue;
        rem[i - db + j] -= f * b.c_[j];
      }
      quo[i - db] = std::move(f);
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

  /// t^deg * p(1/t), with deg = degree(); zero maps to zero.
  Poly reversed() const {
    std::vector<K> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
  }

  Poly shifted(std::size_t e) const {
    if (zero()) return {};
    std::vector<K> r(e, K(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
  }

  K eval(const K& x) const {
    K acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly monic() const {
    if (zero()) return {};
    return *this * (K(1) / leading());
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s) with s*a = g (mod b), g monic.
template <class K>
std::pair<Poly<K>, Poly<K>> gcd_ext_left(Poly<K> a, Poly<K> b) {
  Poly<K> s0(K(1)), s1;
  while (!b.zero()) {
    auto [q, r] = divmod(a, b);
    Poly<K> s2 = s0 - q * s1;
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (a.zero()) return {a, s0};
  K inv = K(1) / a.leading();
  return {a * inv, s0 * inv};
}

using QPoly = Poly<Rational>;

/// Renders a polynomial in `var`, lowest degree first: `1 - t^6 + 2*t^7`.
std::string format_poly(const QPoly& p, const std::string& var = "t");

}  // namespace taftinv
