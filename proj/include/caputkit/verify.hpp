#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caputkit/induced.hpp"
#include "caputkit/oracle.hpp"

namespace caputkit {

struct VerifyOptions {
  int oracle_bound = kDefaultOracleBound;
  Execution execution = Execution::openmp;
};

// Earliest failed identity, with everything needed to reproduce it by hand.
struct VerifyMismatch {
  int n = 0;
  std::string check;   // which identity failed
  std::string lambda;  // rendered labels ("-" when not applicable)
  std::string rho;
  std::string detail;  // the disagreeing values
};

struct VerifyLevel {
  int n = 0;
  long long pairs = 0;          // (lambda, rho) pairs swept
  bool fixture_checked = false; // n = 5 compared against the pinned table
  bool passed = false;
};

struct VerifyReport {
  int n_max = 0;
  std::vector<VerifyLevel> levels;
  std::optional<VerifyMismatch> first_mismatch;
  bool passed = false;
};

// For every n <= n_max: class sizes against full permutation enumeration and
// their sum against n!; the three-way equivalence quotient = multinomial =
// direct count for every (lambda, rho); the reciprocity sum
// sum_rho |C_rho| * phi^lambda_rho = n! for every lambda; and at n = 5 the
// computed table against the pinned fixture. Requires n_max <= oracle_bound.
VerifyReport run_verification(int n_max, const VerifyOptions& options = {});

// Exit status the CLI maps a report to: 0 all checks passed, 1 mismatch.
int verify_exit_code(const VerifyReport& report);

// Known-good 7x7 induced-character table of S_5, pinned as ground truth.
const CharacterMatrix& reference_matrix_n5();

}  // namespace caputkit
