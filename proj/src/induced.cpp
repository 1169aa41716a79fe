#include "caputkit/induced.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "caputkit/sym_group.hpp"
#include "caputkit/young.hpp"

namespace caputkit {

namespace {

void require_same_weight(const Partition& lambda, const CycleType& rho,
                         const char* who) {
  if (lambda.weight() != rho.weight()) {
    throw std::invalid_argument(
        std::string(who) + ": partition " + render_partition(lambda) +
        " has weight " + std::to_string(lambda.weight()) + " but class " +
        render_cycle_type(rho) + " has weight " + std::to_string(rho.weight()));
  }
}

}  // namespace

BigInt induced_value_quotient(const Partition& lambda, const CycleType& rho) {
  require_same_weight(lambda, rho, "induced_value_quotient");
  const int n = lambda.weight();
  const BigInt numerator = group_order(n) * intersection_count(lambda, rho);
  const BigInt denominator = young_order(lambda) * class_size(n, rho);
  return exact_div(numerator, denominator);
}

BigInt induced_value_multinomial(const Partition& lambda, const CycleType& rho) {
  require_same_weight(lambda, rho, "induced_value_multinomial");
  BigInt total = 0;
  for (const Distribution& distribution : enumerate_distributions(lambda, rho)) {
    BigInt term = 1;
    for (int length = 1; length <= rho.max_cycle_length(); ++length) {
      const int m = rho.multiplicity(length);
      if (m == 0) continue;
      BigInt denominator = 1;
      for (const CycleType& row : distribution.rows) {
        denominator *= factorial(row.multiplicity(length));
      }
      term *= exact_div(factorial(m), denominator);
    }
    total += term;
  }
  return total;
}

CharacterMatrix character_matrix(int n, const MatrixOptions& options) {
  if (n < 0) {
    throw std::invalid_argument("character_matrix: n must be >= 0, got " +
                                std::to_string(n));
  }
  CharacterMatrix matrix;
  matrix.n = n;
  matrix.row_labels = enumerate_partitions(n);
  matrix.col_labels.reserve(matrix.row_labels.size());
  for (auto it = matrix.row_labels.rbegin(); it != matrix.row_labels.rend(); ++it) {
    matrix.col_labels.push_back(partition_to_cycle_type(*it));
  }
  const int dim = matrix.dimension();
  matrix.values.assign(static_cast<std::size_t>(dim),
                       std::vector<BigInt>(static_cast<std::size_t>(dim)));

  const bool cross_check = options.cross_check.value_or(n <= 7);
  const long long cells = static_cast<long long>(dim) * dim;

  // Cells are independent and each writes only its own slot, so the result
  // is identical under either execution policy. Exceptions cannot cross an
  // OpenMP region; failures are recorded and rethrown afterwards.
  std::vector<unsigned char> mismatch(static_cast<std::size_t>(cells), 0);
  std::mutex error_mutex;
  std::string error;

  auto compute_cell = [&](long long index) {
    const int r = static_cast<int>(index / dim);
    const int c = static_cast<int>(index % dim);
    const Partition& lambda = matrix.row_labels[static_cast<std::size_t>(r)];
    const CycleType& rho = matrix.col_labels[static_cast<std::size_t>(c)];
    try {
      BigInt value = induced_value_quotient(lambda, rho);
      if (cross_check && value != induced_value_multinomial(lambda, rho)) {
        mismatch[static_cast<std::size_t>(index)] = 1;
      }
      matrix.values[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          std::move(value);
    } catch (const std::exception& e) {
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (error.empty()) error = e.what();
    }
  };

  if (options.execution == Execution::openmp) {
#pragma omp parallel for schedule(dynamic)
    for (long long index = 0; index < cells; ++index) compute_cell(index);
  } else {
    for (long long index = 0; index < cells; ++index) compute_cell(index);
  }

  if (!error.empty()) throw std::logic_error("character_matrix: " + error);
  for (long long index = 0; index < cells; ++index) {
    if (mismatch[static_cast<std::size_t>(index)]) {
      const int r = static_cast<int>(index / dim);
      const int c = static_cast<int>(index % dim);
      throw std::logic_error(
          "character_matrix: quotient and multinomial routes disagree at "
          "lambda=" +
          render_partition(matrix.row_labels[static_cast<std::size_t>(r)]) +
          " rho=" +
          render_cycle_type(matrix.col_labels[static_cast<std::size_t>(c)]));
    }
  }
  return matrix;
}

}  // namespace caputkit
