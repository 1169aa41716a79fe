#include "caputkit/verify.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "caputkit/sym_group.hpp"
#include "caputkit/young.hpp"

namespace caputkit {

const CharacterMatrix& reference_matrix_n5() {
  static const CharacterMatrix fixture = [] {
    CharacterMatrix m;
    m.n = 5;
    m.row_labels = {
        Partition({5}),       Partition({4, 1}),       Partition({3, 2}),
        Partition({3, 1, 1}), Partition({2, 2, 1}),    Partition({2, 1, 1, 1}),
        Partition({1, 1, 1, 1, 1}),
    };
    m.col_labels = {
        CycleType({5}),          CycleType({3, 1}),       CycleType({1, 2}),
        CycleType({2, 0, 1}),    CycleType({0, 1, 1}),    CycleType({1, 0, 0, 1}),
        CycleType({0, 0, 0, 0, 1}),
    };
    const int table[7][7] = {
        {1, 1, 1, 1, 1, 1, 1},    {5, 3, 1, 2, 0, 1, 0},
        {10, 4, 2, 1, 1, 0, 0},   {20, 6, 0, 2, 0, 0, 0},
        {30, 6, 2, 0, 0, 0, 0},   {60, 6, 0, 0, 0, 0, 0},
        {120, 0, 0, 0, 0, 0, 0},
    };
    m.values.assign(7, std::vector<BigInt>(7));
    for (int r = 0; r < 7; ++r)
      for (int c = 0; c < 7; ++c) m.values[r][c] = table[r][c];
    return m;
  }();
  return fixture;
}

int verify_exit_code(const VerifyReport& report) { return report.passed ? 0 : 1; }

VerifyReport run_verification(int n_max, const VerifyOptions& options) {
  if (n_max < 0)
    throw std::invalid_argument("run_verification: n_max must be >= 0");
  if (n_max > options.oracle_bound) {
    throw std::invalid_argument(
        "run_verification: n_max=" + std::to_string(n_max) +
        " exceeds the oracle bound " + std::to_string(options.oracle_bound) +
        " (raise CAPUT_ORACLE_MAX to go higher)");
  }

  VerifyReport report;
  report.n_max = n_max;
  report.passed = true;

  for (int n = 0; n <= n_max; ++n) {
    VerifyLevel level;
    level.n = n;
    bool level_ok = true;
    auto record = [&](int level_n, std::string check, std::string lambda,
                      std::string rho, std::string detail) {
      level_ok = false;
      if (!report.first_mismatch) {
        report.first_mismatch = VerifyMismatch{level_n, std::move(check),
                                               std::move(lambda), std::move(rho),
                                               std::move(detail)};
      }
    };

    const std::vector<Partition> rows = enumerate_partitions(n);
    std::vector<CycleType> cols;
    cols.reserve(rows.size());
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
      cols.push_back(partition_to_cycle_type(*it));
    const int dim = static_cast<int>(rows.size());
    const long long pairs = static_cast<long long>(dim) * dim;
    level.pairs = pairs;

    // Class sizes against direct enumeration, and their sum against n!.
    BigInt size_sum = 0;
    for (const CycleType& rho : cols) {
      const BigInt formula = class_size(n, rho);
      size_sum += formula;
      const BigInt direct = oracle_class_size(n, rho, options.oracle_bound);
      if (formula != direct) {
        record(n, "class size", "-", render_cycle_type(rho),
               "formula=" + formula.get_str() + " direct=" + direct.get_str());
      }
    }
    if (size_sum != group_order(n)) {
      record(n, "class-size sum", "-", "-",
             size_sum.get_str() + " != " + group_order(n).get_str());
    }

    // Three-way equivalence over every (lambda, rho). Cells are independent;
    // the serial scan below keeps mismatch reporting deterministic.
    std::vector<BigInt> quotient(static_cast<std::size_t>(pairs));
    std::vector<unsigned char> bad(static_cast<std::size_t>(pairs), 0);
    std::mutex error_mutex;
    std::string error;
    auto sweep_pair = [&](long long index) {
      const int r = static_cast<int>(index / dim);
      const int c = static_cast<int>(index % dim);
      const Partition& lambda = rows[static_cast<std::size_t>(r)];
      const CycleType& rho = cols[static_cast<std::size_t>(c)];
      try {
        BigInt q = induced_value_quotient(lambda, rho);
        const BigInt m = induced_value_multinomial(lambda, rho);
        const BigInt o = oracle_induced_value(lambda, rho, options.oracle_bound);
        if (q != m || m != o) bad[static_cast<std::size_t>(index)] = 1;
        quotient[static_cast<std::size_t>(index)] = std::move(q);
      } catch (const std::exception& e) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (error.empty()) error = e.what();
      }
    };
    if (options.execution == Execution::openmp) {
#pragma omp parallel for schedule(dynamic)
      for (long long index = 0; index < pairs; ++index) sweep_pair(index);
    } else {
      for (long long index = 0; index < pairs; ++index) sweep_pair(index);
    }
    if (!error.empty()) throw std::logic_error("run_verification: " + error);
    for (long long index = 0; index < pairs; ++index) {
      if (!bad[static_cast<std::size_t>(index)]) continue;
      const int r = static_cast<int>(index / dim);
      const int c = static_cast<int>(index % dim);
      const Partition& lambda = rows[static_cast<std::size_t>(r)];
      const CycleType& rho = cols[static_cast<std::size_t>(c)];
      record(n, "induced three-way", render_partition(lambda),
             render_cycle_type(rho),
             "quotient=" + induced_value_quotient(lambda, rho).get_str() +
                 " multinomial=" +
                 induced_value_multinomial(lambda, rho).get_str() + " direct=" +
                 oracle_induced_value(lambda, rho, options.oracle_bound).get_str());
      break;
    }

    // Reciprocity: the trivial character appears exactly once, so
    // sum_rho |C_rho| * phi^lambda_rho = n! row by row.
    for (int r = 0; r < dim; ++r) {
      BigInt sum = 0;
      for (int c = 0; c < dim; ++c) {
        sum += class_size(n, cols[static_cast<std::size_t>(c)]) *
               quotient[static_cast<std::size_t>(static_cast<long long>(r) * dim + c)];
      }
      if (sum != group_order(n)) {
        record(n, "reciprocity",
               render_partition(rows[static_cast<std::size_t>(r)]), "-",
               sum.get_str() + " != " + group_order(n).get_str());
      }
    }

    // Pinned ground truth for n = 5.
    if (n == 5) {
      level.fixture_checked = true;
      MatrixOptions matrix_options;
      matrix_options.execution = options.execution;
      matrix_options.cross_check = true;
      if (character_matrix(5, matrix_options) != reference_matrix_n5()) {
        record(5, "reference fixture", "-", "-",
               "computed 7x7 table differs from the pinned one");
      }
    }

    level.passed = level_ok;
    if (!level_ok) report.passed = false;
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace caputkit
