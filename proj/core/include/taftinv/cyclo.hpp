#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycNum is a residue class in Q[t]/Phi_N(t), stored as its canonical
// representative of degree < phi(N). Reduction happens after every operation,
// so equality is coefficient comparison. Level 1 is Q itself; level-1 values
// embed into any other level on contact, every other level mismatch throws.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "taftinv/poly.hpp"

namespace taftinv {

using IntPoly = std::vector<mpz_class>;  // ascending coefficients

/// Phi_N, computed as (t^N - 1) / prod_{d | N, d < N} Phi_d. Cached.
const IntPoly& cyclotomic_polynomial(int N);

/// Euler phi.
int euler_phi(int N);

std::vector<int> divisors(int N);

class CycloField {
 public:
  static std::shared_ptr<const CycloField> get(int level);

  int level() const { return level_; }
  int degree() const { return degree_; }
  const IntPoly& modulus() const { return phi_; }
  /// Nonzero low-order coefficients of Phi_N as (index, value); Phi_N is monic.
  const std::vector<std::pair<int, mpz_class>>& sparse_tail() const { return tail_; }

  explicit CycloField(int level);

 private:
  int level_;
  int degree_;
  IntPoly phi_;
  std::vector<std::pair<int, mpz_class>> tail_;
};

class CycNum {
 public:
  CycNum();
  CycNum(long v);  // NOLINT
  CycNum(const Rational& v);  // NOLINT

  /// The class of t in Q[t]/Phi_N: a primitive N-th root of unity.
  static CycNum primitive_root(int N);
  /// zeta_N^e for any integer e.
  static CycNum root(int N, long long e);
  static CycNum from_coeffs(int N, std::vector<Rational> coeffs);

  int level() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Precondition: is_rational().
  Rational rational_value() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend CycNum operator-(CycNum a);

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  CycNum inverse() const;
  CycNum pow(long long e) const;

  /// Polynomial in `symbol` (the primitive level-th root), e.g. `1/2*r^3 - 2`.
  std::string to_string(const std::string& symbol = "r") const;

 private:
  CycNum(std::shared_ptr<const CycloField> f, std::vector<Rational> c);
  void unify(CycNum& other);
  void embed_into(const std::shared_ptr<const CycloField>& f);

  std::shared_ptr<const CycloField> field_;
  std::vector<Rational> c_;
};

inline bool is_zero(const CycNum& x) { return x.is_zero(); }

using CPoly = Poly<CycNum>;

/// Least m >= 1 with c^m = 1, or nullopt if c is not a root of unity.
/// Throws std::domain_error on c = 0.
std::optional<int> order_of(const CycNum& c);

/// Gaussian binomial [m choose r]_q via the q-Pascal recurrence
///   [m r] = [m-1 r] + q^(m-r) [m-1 r-1],
/// which stays defined at roots of unity.
CycNum gauss_binomial(int m, int r, const CycNum& q);

/// zeta_order^exponent, kept abstract until embedded in a concrete field.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(long long exponent, long long order);

  long long exponent() const { return exponent_; }
  long long order() const { return order_; }

  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity inverse() const;
  RootOfUnity pow(long long e) const;
  bool operator==(const RootOfUnity& o) const = default;

  /// True iff this is a power of `base`.
  bool is_power_of(const RootOfUnity& base) const;
  /// Least j >= 0 with base^j = *this. Precondition: is_power_of(base).
  long long log_base(const RootOfUnity& base) const;

  /// Image in Q(zeta_level); requires order() | level.
  CycNum embed(int level) const;

 private:
  long long exponent_ = 0;
  long long order_ = 1;
};

}  // namespace taftinv
