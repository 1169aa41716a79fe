#pragma once

#include <vector>

#include "caputkit/bigint.hpp"
#include "caputkit/partition.hpp"

namespace caputkit {

// One conjugacy class of S_n: its cycle type and the number of its elements.
struct ClassInfo {
  CycleType cycle_type;
  BigInt size;
};

// |S_n| = n!
BigInt group_order(int n);

// Size of the class with cycle type rho: n! / prod_j (j^{m_j} * m_j!).
// The division is always exact; rho must have weight n.
BigInt class_size(int n, const CycleType& rho);

// All classes of S_n, ordered like enumerate_partitions(n) (descending
// lexicographic partition labels).
std::vector<ClassInfo> conjugacy_classes(int n);

}  // namespace caputkit
