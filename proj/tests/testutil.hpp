#pragma once

#include <string>
#include <vector>

#include "caputkit/partition.hpp"

namespace testutil {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout with stderr folded in
};

// Runs through /bin/sh; the command string may carry env prefixes.
CommandResult run_command(const std::string& command);

// Path of the caput-kit binary, from the CAPUT_KIT_BIN environment variable.
std::string cli_path();

// Independent partition counting: solutions of n = sum_j j*m_j over
// non-negative multiplicities, without touching the production enumerator.
long long count_multiplicity_solutions(int n);

// Independent feasibility check: can the parts of rho (read as a partition)
// be split into sub-multisets summing to lambda_1, ..., lambda_p? Exhaustive
// backtracking over bins, unrelated to the distribution enumerator.
bool splittable(const caputkit::Partition& lambda, const caputkit::CycleType& rho);

// Brute force over bitmasks: k-subsets of {0..n-1} containing caput_mask.
long long count_subsets_containing(int n, int k, unsigned caput_mask);
// Same, over subsets of every size.
long long count_all_subsets_containing(int n, unsigned caput_mask);

// Value cells of a rendered character table: every token after the row label,
// header line skipped, row-major.
std::vector<long long> table_text_integers(const std::string& rendered);
std::vector<long long> table_csv_integers(const std::string& rendered);

// Whitespace-separated tokens of one string.
std::vector<std::string> tokens_of(const std::string& text);

inline caputkit::Partition part(std::vector<int> parts) {
  return caputkit::Partition(std::move(parts));
}
// Cycle type written down as its partition ("class (2,1,1,1)" -> cls({2,1,1,1})).
inline caputkit::CycleType cls(std::vector<int> parts) {
  return caputkit::partition_to_cycle_type(caputkit::Partition(std::move(parts)));
}

}  // namespace testutil
