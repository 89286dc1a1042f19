#pragma once

// The full verification battery: every headline check the library is
// expected to reproduce, with pinned exact expectations and runtime
// budgets. Shared by the CLI `report all` subcommand and the
// integration test binary.

#include <cstdint>
#include <string>
#include <vector>

namespace gbss::report {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;   // deterministic for a fixed seed
  double elapsed_ms = 0.0;
  double budget_ms = 0.0;  // 0 = no budget
};

CriterionResult b2_node_counterexample();
CriterionResult ac_nonnegativity_sweep(int threads);
CriterionResult d3_violation_exists();
CriterionResult so5_two_point_block();
CriterionResult polarization_independence(uint64_t seed);
CriterionResult three_form_agreement(uint64_t seed);
CriterionResult alpha_k_batch(uint64_t seed);
CriterionResult descent_equivalence_batch(uint64_t seed);
CriterionResult dynkin_anchor_values();
CriterionResult level_duality();
CriterionResult tensor_mu_checks(uint64_t seed);

std::vector<CriterionResult> run_all(uint64_t seed, int threads);

}  // namespace gbss::report
