#pragma once

// The free algebra k<u, v>, Taft pairs acting on it, and the classification
// of homogeneous inner-faithful actions on noetherian down-up algebras.

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "taftinv/cyclo.hpp"

namespace taftinv {

/// Words over {u, v} mapped to nonzero coefficients.
class FreeElement {
 public:
  using Terms = std::map<std::string, CycNum>;

  FreeElement() = default;
  static FreeElement word(const std::string& w, const CycNum& c = CycNum(1L));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CycNum coeff(const std::string& w) const;

  void add(const std::string& w, const CycNum& c);

  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator-=(const FreeElement& o);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(const CycNum& s, const FreeElement& a);
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  friend bool operator==(const FreeElement& a, const FreeElement& b);

  std::string to_string() const;

 private:
  Terms terms_;
};

/// 2x2 matrix acting on span{u, v}. Column c is the image of basis vector c
/// (0 = u, 1 = v), so m[r][c] is the e_r coordinate of m(e_c).
using Mat2 = std::array<std::array<CycNum, 2>, 2>;

Mat2 mat2_mul(const Mat2& a, const Mat2& b);
Mat2 mat2_scale(const CycNum& s, const Mat2& a);
Mat2 mat2_identity();
bool mat2_is_zero(const Mat2& a);

struct TaftPair {
  int n = 2;
  CycNum omega;
  Mat2 gmat;
  Mat2 xmat;
};

enum class Family { Case1 = 1, Case2 = 2 };
enum class SqrtChoice { Principal, Alternate };

std::string to_string(SqrtChoice c);
std::optional<SqrtChoice> parse_sqrt_choice(const std::string& s);

/// One classified action. All values live in Q(zeta_{2n}).
///
/// omega = zeta^(2 omega_unit). For case 1, sqrt_omega is the chosen square
/// root of omega: zeta^omega_unit (principal) or zeta^(omega_unit + n)
/// (alternate). For case 2 it is the chosen square root of omega^-1, with
/// principal zeta^-omega_unit.
struct ActionSpec {
  int n = 2;
  int k = 0;
  Family family = Family::Case1;
  SqrtChoice sqrt_choice = SqrtChoice::Principal;
  CycNum q{1L};
  int omega_unit = 1;

  CycNum zeta;
  CycNum omega;
  CycNum sqrt_omega;
  CycNum alpha;
  CycNum beta;
  CycNum eps_k;  // omega^-(k+1) sqrt_omega, case 1 only
  int sqrt_order = 0;

  // zeta exponents, reduced mod 2n, for cheap eigenvalue arithmetic.
  int omega_exp = 2;
  int sqrt_exp = 1;
  std::shared_ptr<const std::vector<CycNum>> zeta_table;  // zeta^0 .. zeta^(2n-1)

  int level() const { return 2 * n; }
  bool order_n() const { return sqrt_order == n; }
  /// zeta^e
  CycNum zeta_pow(long long e) const;
  /// omega^e
  CycNum omega_pow(long long e) const { return zeta_pow(static_cast<long long>(omega_exp) * e); }

  std::string describe() const;
};

/// Throws std::invalid_argument on out-of-range parameters or a zero scale.
ActionSpec make_spec(int n, int k, Family family, SqrtChoice choice, const CycNum& q = CycNum(1L),
                     int omega_unit = 1);

TaftPair to_taft_pair(const ActionSpec& spec);

/// Conjugation by the swap u <-> v turns a case-2 action into a case-1 action
/// on the same algebra; case-1 specs are returned unchanged.
ActionSpec normalize_to_case1(const ActionSpec& spec);

enum class Letter { G, X };

FreeElement act_free(const TaftPair& pair, Letter which, const FreeElement& e);

/// The two defining relations v^2u - a vuv - b uv^2 and vu^2 - a uvu - b u^2v.
std::array<FreeElement, 2> downup_relations(const CycNum& alpha, const CycNum& beta);

struct ValidityReport {
  bool valid = true;
  std::string failed;  // empty when valid
  std::string detail;
};

/// Throws std::invalid_argument if beta = 0.
ValidityReport is_valid_action(const TaftPair& pair, const CycNum& alpha, const CycNum& beta);

/// All 4n specs, ordered by family, then k, then principal before alternate.
std::vector<ActionSpec> classify_actions(int n);

/// Specs whose characteristic roots are {g1, g2}. Returns empty when
/// g1^-2 g2^2 = 1 or when neither root passes the power condition.
std::vector<ActionSpec> actions_for_downup(const RootOfUnity& g1, const RootOfUnity& g2);

/// The characteristic roots (t1, t2) of t^2 - alpha t - beta for a spec,
/// as roots of unity of order dividing 2n.
std::pair<RootOfUnity, RootOfUnity> characteristic_roots(const ActionSpec& spec);

FreeElement superpotential(const CycNum& alpha, const CycNum& beta);

struct SuperpotentialReport {
  bool x_annihilates = false;
  CycNum g_eigenvalue;
};

/// Throws std::logic_error if g.w is not a multiple of w.
SuperpotentialReport superpotential_check(const ActionSpec& spec);

}  // namespace taftinv
