#pragma once

#include "caputkit/bigint.hpp"
#include "caputkit/partition.hpp"

namespace caputkit {

// The group-theoretic form of a "prescribed sub-structure" counting query:
// a degree n, a Young subgroup shape lambda, and an ambient class rho, both
// of weight n.
struct CaputQuery {
  CaputQuery(int n, Partition lambda, CycleType rho);

  int n;
  Partition lambda;
  CycleType rho;
};

struct CaputAnswer {
  BigInt value;  // phi^lambda_rho
  CaputQuery query;
};

// The induced-character reading of the query: the count is exactly
// phi^lambda_rho, evaluated through the quotient route.
CaputAnswer caput_variations(const CaputQuery& query);

// The elementary reading: k-subsets of an n-set that contain a fixed
// c-subset. Equals C(n-c, k-c); requires c <= k <= n with n, k >= 1, c >= 0.
BigInt caput_combinations(int n, int k, int c);

// Subsets of every size containing a fixed c-subset:
// sum_{k=c}^{n} C(n-c, k-c) = 2^(n-c); requires 0 <= c <= n.
BigInt caput_combinations_all_sizes(int n, int c);

}  // namespace caputkit
