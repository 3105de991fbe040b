#pragma once

// The Taft algebra action on A(alpha, beta) in PBW coordinates.
//
// g scales u^i z^j v^l by omega^((k+1)i + (2k+1)j + kl). x is computed either
// by the closed formula
//   x.(u^i z^j v^l) = q omega^(i(k+1) + j(2k+1)) u^i z^j (x.v^l),
//   x.v^m = lambda_m u v^(m-1) + mu_m z v^(m-2),
// or by expanding the skew-derivation rule letter by letter.
//
// Both g and x respect the bidegree (i + j, j + l) up to a shift: g preserves
// it, x moves (p, q) to (p + 1, q - 1).

#include <mutex>
#include <string>
#include <vector>

#include "taftinv/downup.hpp"
#include "taftinv/linalg.hpp"

namespace taftinv {

struct GradedOperator {
  int degree = 0;
  Letter label = Letter::G;
  std::vector<Monomial> basis;  // graded_basis(degree)
  Matrix matrix;                // column c is the image of basis[c]
};

/// Monomials of bidegree (p, q): u^(p-j) z^j v^(q-j), ordered by j.
std::vector<Monomial> bidegree_basis(int p, int q);

class TaftAction {
 public:
  explicit TaftAction(const DownUp& algebra);

  const DownUp& algebra() const { return alg_; }
  const ActionSpec& spec() const { return alg_.spec(); }

  /// Exponent e with g.(u^i z^j v^l) = omega^e u^i z^j v^l, reduced mod n.
  int g_exponent(const Monomial& m) const;
  CycNum g_eigenvalue(const Monomial& m) const;

  /// [m]_{omega^-1}
  CycNum lambda(int m) const;
  /// omega^k [m choose 2]_{sqrt(omega)^-1}
  CycNum mu(int m) const;

  PBWElement act_g(const PBWElement& e) const;
  PBWElement act_x(const PBWElement& e) const;
  PBWElement act_x(const Monomial& m) const;
  PBWElement act_x_recursive(const PBWElement& e) const;
  PBWElement iterated_x(int m, const PBWElement& e) const;

  GradedOperator operator_matrix(Letter which, int d) const;

  /// Matrix of x from bidegree (p, q) to (p + 1, q - 1), in bidegree_basis order.
  Matrix x_block(int p, int q) const;

 private:
  void grow(int m) const;

  const DownUp& alg_;
  mutable std::mutex mu_;
  mutable std::vector<CycNum> lambda_;
  mutable std::vector<CycNum> mu_vals_;
};

// Convenience wrappers that build the algebra on the fly.
PBWElement act_g(const ActionSpec& spec, const PBWElement& e);
PBWElement act_x(const ActionSpec& spec, const PBWElement& e);
PBWElement act_x_recursive(const ActionSpec& spec, const PBWElement& e);
PBWElement iterated_x(const ActionSpec& spec, int m, const PBWElement& e);
GradedOperator operator_matrix(const ActionSpec& spec, Letter which, int d);

}  // namespace taftinv
