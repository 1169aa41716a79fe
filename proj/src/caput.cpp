#include "caputkit/caput.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "caputkit/induced.hpp"

namespace caputkit {

CaputQuery::CaputQuery(int n_, Partition lambda_, CycleType rho_)
    : n(n_), lambda(std::move(lambda_)), rho(std::move(rho_)) {
  if (n < 1)
    throw std::invalid_argument("CaputQuery: n must be >= 1, got " +
                                std::to_string(n));
  if (lambda.weight() != n)
    throw std::invalid_argument("CaputQuery: partition " +
                                render_partition(lambda) + " has weight " +
                                std::to_string(lambda.weight()) +
                                ", expected " + std::to_string(n));
  if (rho.weight() != n)
    throw std::invalid_argument("CaputQuery: class " + render_cycle_type(rho) +
                                " has weight " + std::to_string(rho.weight()) +
                                ", expected " + std::to_string(n));
}

CaputAnswer caput_variations(const CaputQuery& query) {
  return CaputAnswer{induced_value_quotient(query.lambda, query.rho), query};
}

BigInt caput_combinations(int n, int k, int c) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("caput_combinations: n and k must be >= 1");
  if (c < 0 || c > k || k > n)
    throw std::invalid_argument(
        "caput_combinations: need 0 <= c <= k <= n, got n=" +
        std::to_string(n) + " k=" + std::to_string(k) + " c=" +
        std::to_string(c));
  return binomial(n - c, k - c);
}

BigInt caput_combinations_all_sizes(int n, int c) {
  if (n < 0 || c < 0 || c > n)
    throw std::invalid_argument(
        "caput_combinations_all_sizes: need 0 <= c <= n, got n=" +
        std::to_string(n) + " c=" + std::to_string(c));
  return pow2(n - c);
}

}  // namespace caputkit
