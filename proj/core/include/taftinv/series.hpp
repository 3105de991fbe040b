#pragma once

// Hilbert and trace series as rational functions, Molien averaging over <g>,
// Stanley's functional-equation test, homological determinants, and the
// order-n reflection/Gorenstein arithmetic.

#include <optional>
#include <string>
#include <vector>

#include "taftinv/freealg.hpp"
#include "taftinv/poly.hpp"

namespace taftinv {

/// num / den with den != 0. Arithmetic keeps results unreduced; call
/// normalize() for lowest terms with den(0) = 1 (or den monic if den(0) = 0).
template <class K>
class RatFn {
 public:
  RatFn() : num_(), den_(K(1)) {}
  RatFn(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.zero()) throw std::domain_error("rational function with zero denominator");
  }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }

  /// Euclidean gcd reduction.
  RatFn& normalize() {
    const Poly<K> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    return canonicalize();
  }

  /// Scales so den(0) = 1, or den monic when den(0) = 0.
  RatFn& canonicalize() {
    const K d0 = den_.coeff(0);
    const K s = K(1) / (is_zero(d0) ? den_.leading() : d0);
    num_ *= s;
    den_ *= s;
    return *this;
  }

  /// First `terms` power-series coefficients. Requires den(0) != 0.
  std::vector<K> series(std::size_t terms) const {
    const K d0 = den_.coeff(0);
    if (is_zero(d0)) throw std::domain_error("series expansion needs a nonzero constant term in the denominator");
    const K inv = K(1) / d0;
    std::vector<K> out(terms, K(0));
    const auto& dc = den_.coeffs();
    for (std::size_t i = 0; i < terms; ++i) {
      K acc = num_.coeff(i);
      for (std::size_t j = 1; j < dc.size() && j <= i; ++j)
        if (!is_zero(dc[j])) acc -= dc[j] * out[i - j];
      out[i] = acc * inv;
    }
    return out;
  }

  /// h(1/t), written over polynomials in t.
  RatFn substitute_inverse() const {
    if (num_.zero()) return *this;
    const int shift = den_.degree() - num_.degree();
    Poly<K> n = num_.reversed();
    Poly<K> d = den_.reversed();
    if (shift >= 0)
      n = n.shifted(shift);
    else
      d = d.shifted(-shift);
    return RatFn(std::move(n), std::move(d));
  }

  friend RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFn operator*(const RatFn& a, const RatFn& b) { return RatFn(a.num_ * b.num_, a.den_ * b.den_); }
  friend RatFn operator*(const K& s, const RatFn& a) { return RatFn(a.num_ * s, a.den_); }

  /// Equality as rational functions (cross-multiplication).
  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

 private:
  Poly<K> num_;
  Poly<K> den_;
};

using QRatFn = RatFn<Rational>;
using CRatFn = RatFn<CycNum>;

/// `num / den`, e.g. `(1 - t^6) / (1 - t - t^4 + t^5)`; single terms unbracketed.
std::string format_ratfn(const QRatFn& h);

/// Product of (1 - t^a) over the given exponents.
QPoly one_minus_t_powers(const std::vector<int>& exponents);

/// Lowest terms for a denominator that is a product of cyclotomic
/// polynomials Phi_d with d dividing one of `periods`; canonical form
/// den(0) = 1. Falls back to Euclid if the hint does not cover den.
QRatFn normalize_cyclotomic(const QRatFn& h, const std::vector<int>& periods);

/// A trace series as data: sum of sign * zeta^z * t^e over numerator terms,
/// divided by prod (1 - zeta^z t^e) over denominator factors.
struct FactoredSeries {
  struct Term {
    int t_exp;
    long long zeta_exp;
    int sign;
  };
  int level = 1;  // zeta = primitive level-th root
  std::vector<Term> numerator;
  std::vector<Term> denominator;  // sign unused

  CRatFn to_ratfn() const;
};

/// Trace of g^m on A^x (closed form; the order-n and order-2n regimes differ).
FactoredSeries trace_series_Ax_factored(const ActionSpec& spec, int m);
CRatFn trace_series_Ax(const ActionSpec& spec, int m);

/// Trace of g^m on A: 1 / ((1 - w^{m(k+1)} t)(1 - w^{mk} t)(1 - w^{m(2k+1)} t^2)).
CRatFn trace_series_A(const ActionSpec& spec, int m);

/// Hilbert series of A^T by Molien over <g> acting on A^x. Throws
/// std::logic_error if an irrational coefficient survives averaging.
QRatFn molien(const ActionSpec& spec);

struct GorensteinVerdict {
  bool gorenstein = false;
  int sign = 0;
  int m = 0;
};

GorensteinVerdict stanley_test(const QRatFn& h);

/// A closed form for hilb A^T known in the order-2n regime, with its verdict.
struct ClosedForm {
  std::string name;
  QRatFn series;
  std::vector<int> periods;  // for normalize_cyclotomic
  GorensteinVerdict verdict;
};

/// k = n-1; n odd with k = (n-1)/2; n = 2 mod 4 with k = (n-2)/4 or (3n-2)/4;
/// n = 2, k = 0. Empty for other parameters and in the order-n regime.
std::optional<ClosedForm> known_hilbert_series(const ActionSpec& spec);

/// Reads c from Tr(g, t) = (-1)^3 c^{-1} t^{-l} + lower terms at t = infinity.
CycNum hdet_from_trace(const CRatFn& trace, int dimension = 3);

/// Homological determinant of g on A^x, from the expansion of the m = 1 trace.
CycNum hdet_ax(const ActionSpec& spec);

/// Homological determinant of g on A, from the superpotential.
/// Throws std::logic_error if x . w != 0.
CycNum hdet_a(const ActionSpec& spec);

struct ReflectionClass {
  int kind = 0;  // 1: de = 1, 2: de = n, 3: otherwise
  int d = 0;     // gcd(k + 1, n)
  int e = 0;     // gcd(2k + 1, n)
};

ReflectionClass reflection_classify(int n, int k);

/// (k+1) gcd(2k+1, n) + (2k+1) gcd(k+1, n) == 0 mod n
bool gorenstein_congruence(int n, int k);

/// Number of ways to write d as a nonnegative combination of the parts.
/// Throws std::invalid_argument on an empty part list.
unsigned long long restricted_partition(const std::vector<int>& parts, int d);

struct TableCell {
  int n = 0;
  int k = 0;
  bool gorenstein = false;
  int sign = 0;
  int m = 0;
  char covered = '-';  // 'a': k = n-1, 'b': 4k+3 = 0 mod n, 'c': n >= 3 and 4k+2 = 0 mod n
};

char theorem_coverage(int n, int k);

/// Every (n, k) with 2 <= n <= n_max in the order-2n regime (principal
/// square root). Cells are computed on `workers` threads; 0 reads
/// TAFTINV_WORKERS or falls back to the hardware concurrency.
std::vector<TableCell> gorenstein_table(int n_max, unsigned workers = 0);

std::string table_csv(const std::vector<TableCell>& cells);
std::string table_grid(const std::vector<TableCell>& cells);

}  // namespace taftinv
