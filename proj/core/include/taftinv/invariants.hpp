#pragma once

// Graded invariants A^x and A^T = (A^x)^g, greedy generator discovery, and
// exact checks of the known presentations of A^x.
//
// x maps bidegree (p, q) to (p + 1, q - 1) and g is constant on each
// bidegree, so kernels are computed block by block. A dense route over the
// whole graded piece is kept as a cross-check.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taftinv/downup.hpp"
#include "taftinv/taft.hpp"

namespace taftinv {

enum class Flavor { XOnly, Full };

std::string to_string(Flavor f);

struct InvariantBasis {
  int degree = 0;
  std::vector<PBWElement> vectors;
  Flavor flavor = Flavor::XOnly;

  std::size_t dim() const { return vectors.size(); }
};

/// Coordinates of a homogeneous element of degree d in graded_basis(d).
Vec coordinates(const PBWElement& e, int d);

/// Owns the algebra and the action for one spec; safe to share across threads.
class InvariantEngine {
 public:
  explicit InvariantEngine(const ActionSpec& spec);

  const ActionSpec& spec() const { return alg_->spec(); }
  const DownUp& algebra() const { return *alg_; }
  const TaftAction& action() const { return *act_; }

  InvariantBasis x_invariants(int d) const;
  InvariantBasis full_invariants(int d) const;
  InvariantBasis invariants(int d, Flavor f) const { return f == Flavor::Full ? full_invariants(d) : x_invariants(d); }

  /// Same spaces from the dense operator matrices on graded_basis(d).
  InvariantBasis x_invariants_dense(int d) const;
  InvariantBasis full_invariants_dense(int d) const;

  /// Degrees 0..max_degree, computed on `workers` threads (0: hardware).
  std::vector<InvariantBasis> invariants_up_to(int max_degree, Flavor f, unsigned workers = 0) const;

 private:
  InvariantBasis block_kernels(int d, Flavor f) const;

  std::unique_ptr<DownUp> alg_;
  std::unique_ptr<TaftAction> act_;
};

InvariantBasis x_invariants(const ActionSpec& spec, int d);
InvariantBasis full_invariants(const ActionSpec& spec, int d);

struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // both sides when the check fails
};

struct DimensionRow {
  int degree = 0;
  std::size_t computed = 0;
  std::size_t predicted = 0;
};

struct GeneratorReport {
  Flavor flavor = Flavor::XOnly;
  int max_degree = 0;
  std::vector<std::pair<int, PBWElement>> generators;
  std::vector<NamedCheck> relation_checks;
  std::vector<DimensionRow> dimension_table;

  std::vector<int> degrees() const;
  bool ok() const;
};

/// Greedy closure: at each degree the products of chosen generators are
/// spanned, and invariant basis vectors outside that span become generators.
GeneratorReport find_generators(const ActionSpec& spec, int max_degree, Flavor flavor = Flavor::Full);

std::string to_json(const GeneratorReport& r, int indent = 2);

struct PresentationReport {
  bool order_n = false;
  int max_degree = 0;
  std::vector<NamedCheck> checks;
  std::vector<DimensionRow> dimension_table;  // predicted = monomial count

  bool ok() const;
  /// First failing check, if any.
  std::optional<NamedCheck> first_failure() const;
};

/// a = x^(n-1) . v^(2n-1).
PBWElement element_a(const InvariantEngine& eng);

/// prod_{i=1}^{n-1} omega^((i-1)(2k+1)) mu_(2i): the coefficient of z^(n-1)
/// in x^(n-1) . v^(2n-2).
CycNum closed_scalar_product(const InvariantEngine& eng);
/// omega^(n(n-1)(2k+1)/2 + k(n-1)) prod_{i=1}^{n-1} [2i choose 2]_{sqrt(omega)^-1}.
CycNum closed_scalar_printed(const InvariantEngine& eng);

/// Relation identities and monomial counts against dim A^x, degree <= max_degree.
PresentationReport verify_presentation(const ActionSpec& spec, int max_degree);

struct CommutativityReport {
  bool commutative = true;
  std::optional<std::pair<PBWElement, PBWElement>> witness;
};

/// Looks for a non-commuting pair of A^T elements of degree <= max_degree.
/// In the order-2n regime u^(2k+1) z^(n-k-1) and z^n are tried first.
CommutativityReport commutativity_report(const ActionSpec& spec, int max_degree);

}  // namespace taftinv
