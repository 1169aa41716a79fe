#pragma once

#include <vector>

#include "caputkit/bigint.hpp"
#include "caputkit/partition.hpp"

namespace caputkit {

// The direct product S_{lambda_1} x ... x S_{lambda_p} inside S_n, factor i
// permuting its own block of lambda_i symbols. Equal parts stay distinct
// ordered factors.
struct YoungSubgroup {
  Partition lambda;
  BigInt order;  // prod_i lambda_i!
};

BigInt young_order(const Partition& lambda);
YoungSubgroup young_subgroup(Partition lambda);

// One way of drawing the cycles of an ambient class from the factors of a
// Young subgroup: row i is the cycle type contributed by factor i. Row i has
// weight lambda_i and the column sums reproduce the ambient multiplicities.
struct Distribution {
  std::vector<CycleType> rows;

  bool operator==(const Distribution&) const = default;
  int column_multiplicity(int length) const;  // sum over rows of m_{i,length}
};

// Every distribution of rho across the parts of lambda, each exactly once,
// in a deterministic order (parts left to right; within a part, longer
// cycles allotted last-to-first with smaller counts tried first). Empty when
// the class does not meet the subgroup. lambda and rho must share a weight.
std::vector<Distribution> enumerate_distributions(const Partition& lambda,
                                                  const CycleType& rho);

// Number of elements of the ambient class rho lying in the Young subgroup:
// the sum over distributions of the product of per-factor class sizes.
// Every summand is a positive exact integer.
BigInt intersection_count(const Partition& lambda, const CycleType& rho);

}  // namespace caputkit
