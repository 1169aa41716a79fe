#include "caputkit/sym_group.hpp"

#include <stdexcept>
#include <string>

namespace caputkit {

BigInt group_order(int n) { return factorial(n); }

BigInt class_size(int n, const CycleType& rho) {
  if (rho.weight() != n) {
    throw std::invalid_argument(
        "class_size: cycle type " + render_cycle_type(rho) + " has weight " +
        std::to_string(rho.weight()) + ", expected " + std::to_string(n));
  }
  // Denominator 1^{m_1} m_1! 2^{m_2} m_2! ... ; centralizer order, so the
  // division is exact.
  BigInt denominator = 1;
  for (int length = 1; length <= rho.max_cycle_length(); ++length) {
    const int m = rho.multiplicity(length);
    if (m == 0) continue;
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(length),
                  static_cast<unsigned long>(m));
    denominator *= power * factorial(m);
  }
  return exact_div(group_order(n), denominator);
}

std::vector<ClassInfo> conjugacy_classes(int n) {
  std::vector<ClassInfo> out;
  for (const Partition& label : enumerate_partitions(n)) {
    CycleType rho = partition_to_cycle_type(label);
    BigInt size = class_size(n, rho);
    out.push_back(ClassInfo{std::move(rho), std::move(size)});
  }
  return out;
}

}  // namespace caputkit
