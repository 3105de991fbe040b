#pragma once

// Acceptance criteria as runnable checks, grouped into suites.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace taftinv {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> notes;     // sub-check tallies
  std::vector<std::string> failures;  // first few counterexamples
};

/// Reference Gorenstein grid for n <= 16: true cells per row, and the
/// subset marked as covered by the sufficient conditions.
struct ReferenceRow {
  std::set<int> gorenstein;
  std::set<int> covered;
};
const std::map<int, ReferenceRow>& reference_table();

CriterionResult criterion_table();                 // 1
CriterionResult criterion_coverage();              // 2
CriterionResult criterion_molien_oracle();         // 3
CriterionResult criterion_identities();            // 4
CriterionResult criterion_hilbert_regressions();   // 5
CriterionResult criterion_hdet();                  // 6
CriterionResult criterion_classification();        // 7
CriterionResult criterion_presentations();         // 8
CriterionResult criterion_order_n_congruence();    // 9

/// Criterion ids 1..9.
CriterionResult run_criterion(int id);

/// "identities" {4, 6, 7}, "presentations" {8}, "molien" {3, 5, 9}, "table" {1, 2}.
const std::map<std::string, std::vector<int>>& suites();

std::string format_result(const CriterionResult& r);

}  // namespace taftinv
