#pragma once

#include <functional>
#include <vector>

#include "caputkit/bigint.hpp"
#include "caputkit/partition.hpp"

namespace caputkit {

// Full enumeration of S_n stays cheap through n = 7 (5040 permutations);
// larger degrees are rejected unless the caller raises the bound explicitly
// (the CLI reads CAPUT_ORACLE_MAX).
inline constexpr int kDefaultOracleBound = 7;

// A permutation of {0, ..., n-1} stored as its image table.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);  // must be a bijection
  static Perm identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  bool operator==(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

CycleType cycle_type_of(const Perm& p);

// Canonical representative of the class rho: cycles laid out left to right
// on 0..n-1 in weakly decreasing length, each cycle advancing its points by
// one (0 -> 1 -> ... -> 0).
Perm class_representative(const CycleType& rho);

// by ∘ p ∘ by^{-1}; conjugation preserves the cycle type.
Perm conjugate(const Perm& p, const Perm& by);

// Disjoint blocks covering {0, ..., n-1} with |blocks[i]| = lambda_i; blocks
// of equal size are distinguishable by position. Concrete model for the
// cosets of a Young subgroup.
struct OrderedSetPartition {
  std::vector<std::vector<int>> blocks;  // each block sorted ascending
};

void for_each_ordered_set_partition(
    const Partition& lambda,
    const std::function<void(const OrderedSetPartition&)>& visit);
std::vector<OrderedSetPartition> enumerate_ordered_set_partitions(
    const Partition& lambda);

// Class size by direct enumeration of all n! permutations.
BigInt oracle_class_size(int n, const CycleType& rho,
                         int bound = kDefaultOracleBound);

// |C_rho ∩ S_lambda| by enumerating the Young subgroup element by element.
BigInt oracle_intersection_count(const Partition& lambda, const CycleType& rho,
                                 int bound = kDefaultOracleBound);

// Ordered set partitions of shape lambda fixed blockwise by p, i.e. every
// block is mapped onto itself.
BigInt fixed_partition_count(const Partition& lambda, const Perm& p);

// Induced character value by direct counting: fixed_partition_count at the
// canonical representative of rho. The count is a class function, which the
// tests check separately by conjugating the representative.
BigInt oracle_induced_value(const Partition& lambda, const CycleType& rho,
                            int bound = kDefaultOracleBound);

}  // namespace caputkit
