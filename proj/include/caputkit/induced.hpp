#pragma once

#include <optional>
#include <vector>

#include "caputkit/bigint.hpp"
#include "caputkit/partition.hpp"

namespace caputkit {

// Kernels that fill independent cells can run serially (reference) or under
// OpenMP. Results are identical by construction; tests compare the two.
enum class Execution { serial, openmp };

// phi^lambda_rho via the quotient route:
//   (|S_n| * |C_rho ∩ S_lambda|) / (|S_lambda| * |C_rho|).
// Always an exact non-negative integer.
BigInt induced_value_quotient(const Partition& lambda, const CycleType& rho);

// phi^lambda_rho via the multinomial route: the sum over distributions of
// prod_j ( m_j! / prod_i m_{i,j}! ). Agrees with the quotient route; the
// library treats that identity as a runtime-checkable contract.
BigInt induced_value_multinomial(const Partition& lambda, const CycleType& rho);

// The full p(n) x p(n) table of phi^lambda_rho. Rows are partitions in
// descending lexicographic order; columns are the reverse order viewed as
// cycle types, so 1^n comes first and the n-cycle last.
struct CharacterMatrix {
  int n = 0;
  std::vector<Partition> row_labels;
  std::vector<CycleType> col_labels;
  std::vector<std::vector<BigInt>> values;

  int dimension() const { return static_cast<int>(row_labels.size()); }
  const BigInt& value(int row, int col) const {
    return values[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }

  bool operator==(const CharacterMatrix&) const = default;
};

struct MatrixOptions {
  Execution execution = Execution::openmp;
  // Recompute every cell through the multinomial route and require agreement
  // with the quotient route. Defaults to on for n <= 7, off above.
  std::optional<bool> cross_check;
};

// Cells are computed via the quotient route, row-major, independently; the
// result is deterministic regardless of execution policy. A cross-check
// failure raises std::logic_error naming the offending cell.
CharacterMatrix character_matrix(int n, const MatrixOptions& options = {});

}  // namespace caputkit
