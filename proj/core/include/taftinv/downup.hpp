#pragma once

// The down-up algebra A(alpha, beta) of a case-1 action, in the PBW basis
// u^i z^j v^l with z = vu - omega^-(k+1) uv.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "taftinv/freealg.hpp"

namespace taftinv {

struct Monomial {
  int i = 0;
  int j = 0;
  int l = 0;

  int degree() const { return i + 2 * j + l; }
  auto operator<=>(const Monomial&) const = default;
};

/// All (i, j, l) with i + 2j + l = d, in lexicographic order.
std::vector<Monomial> graded_basis(int d);

class PBWElement {
 public:
  using Terms = std::map<Monomial, CycNum>;

  PBWElement() = default;
  PBWElement(const CycNum& scalar);  // NOLINT
  static PBWElement monomial(const Monomial& m, const CycNum& c = CycNum(1L));
  static PBWElement monomial(int i, int j, int l, const CycNum& c = CycNum(1L)) {
    return monomial(Monomial{i, j, l}, c);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  CycNum coeff(const Monomial& m) const;

  void add(const Monomial& m, const CycNum& c);

  /// -1 for zero; otherwise the largest term degree.
  int max_degree() const;
  bool is_homogeneous() const;
  PBWElement component(int d) const;
  /// True iff this is c * 1 for some scalar c (including 0).
  bool is_scalar() const;
  CycNum scalar_value() const;

  PBWElement& operator+=(const PBWElement& o);
  PBWElement& operator-=(const PBWElement& o);
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend PBWElement operator-(const PBWElement& a) { return CycNum(-1L) * a; }
  friend PBWElement operator*(const CycNum& s, const PBWElement& a);
  friend bool operator==(const PBWElement& a, const PBWElement& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Human-readable form that re-parses: `(coef)*u^i*z^j*v^l + ...`, with
/// coefficients as polynomials in r = zeta_{2n}.
std::string to_string(const PBWElement& e);

/// One term per line: `i j l : coef`.
std::string serialize(const PBWElement& e);

class DownUp {
 public:
  /// Throws std::invalid_argument for case-2 specs.
  explicit DownUp(ActionSpec spec);

  const ActionSpec& spec() const { return spec_; }

  PBWElement mul(const PBWElement& a, const PBWElement& b) const;
  PBWElement mul(const Monomial& a, const Monomial& b) const;
  PBWElement pow(const PBWElement& a, int e) const;

  /// v^m u by the closed rewrite rule.
  PBWElement v_power_times_u(int m) const;

  /// Normal form of a word over {u, v, z} by single-letter rewriting only.
  /// Slow; used as an independent check.
  PBWElement normal_form_word(const std::string& word) const;

  /// Normal form of the image of a free-algebra element.
  PBWElement from_free(const FreeElement& e) const;

  /// omega^-(k+1)
  const CycNum& c() const { return c_; }
  /// omega^-(k+1) sqrt(omega); zu = eps uz and vz = eps zv.
  const CycNum& eps() const { return eps_; }
  CycNum eps_pow(long long e) const { return spec_.zeta_pow(eps_exp_ * e); }
  CycNum c_pow(long long e) const { return spec_.zeta_pow(c_exp_ * e); }

 private:
  using Row = std::shared_ptr<const std::vector<CycNum>>;
  /// Coefficients of v^m u^i: entry b multiplies u^(i-b) z^b v^(m-b).
  Row vu_block(int m, int i) const;
  Row compute_vu_block(int m, int i) const;

  ActionSpec spec_;
  CycNum c_;
  CycNum eps_;
  long long c_exp_ = 0;
  long long eps_exp_ = 0;

  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, Row> blocks_;
};

/// Product in A(alpha, beta). Builds a fresh algebra object; prefer
/// DownUp::mul in loops so the rewrite memo is shared.
PBWElement pbw_mul(const ActionSpec& spec, const PBWElement& a, const PBWElement& b);

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownSymbol, Domain };
  ParseError(Kind kind, std::size_t position, const std::string& message);
  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// Parses an expression in u, v, z with scalar symbols w (omega), s (the
/// chosen sqrt(omega)) and r (zeta_{2n}), rational literals, + - * / ^ and
/// parentheses. Negative exponents are allowed on scalars only.
PBWElement parse_element(const std::string& text, const DownUp& algebra);
PBWElement parse_element(const std::string& text, const ActionSpec& spec);

/// Parses a scalar expression in w, s, r and rationals.
CycNum parse_scalar(const std::string& text, const ActionSpec& spec);

/// Inverse of serialize().
PBWElement deserialize(const std::string& text, const ActionSpec& spec);

}  // namespace taftinv
