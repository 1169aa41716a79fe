#include "caputkit/young.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "caputkit/sym_group.hpp"

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

BigInt young_order(const Partition& lambda) {
  BigInt order = 1;
  for (int part : lambda.parts()) order *= factorial(part);
  return order;
}

YoungSubgroup young_subgroup(Partition lambda) {
  BigInt order = young_order(lambda);
  return YoungSubgroup{std::move(lambda), std::move(order)};
}

int Distribution::column_multiplicity(int length) const {
  int sum = 0;
  for (const CycleType& row : rows) sum += row.multiplicity(length);
  return sum;
}

std::vector<Distribution> enumerate_distributions(const Partition& lambda,
                                                  const CycleType& rho) {
  require_same_weight(lambda, rho, "enumerate_distributions");
  const int part_count = lambda.part_count();
  const int max_length = rho.max_cycle_length();
  std::vector<int> budget = rho.multiplicities();
  std::vector<CycleType> rows(static_cast<std::size_t>(part_count));
  std::vector<int> row(static_cast<std::size_t>(max_length), 0);
  std::vector<Distribution> out;

  // Backtracking over factors left to right. For factor i, pick a cycle
  // type of weight lambda_i bounded column-wise by what is left of rho.
  // Weight bookkeeping makes the budget come out exactly zero at the end.
  auto place_factor = [&](auto&& self, int factor) -> void {
    if (factor == part_count) {
      out.push_back(Distribution{rows});
      return;
    }
    const int target = lambda.part(factor);
    auto choose = [&](auto&& again, int length, int remaining) -> void {
      if (length == 0) {
        if (remaining == 0) {
          const std::size_t used = static_cast<std::size_t>(
              std::min(max_length, target));
          rows[static_cast<std::size_t>(factor)] =
              CycleType(std::vector<int>(row.begin(),
                                         row.begin() + static_cast<long>(used)));
          self(self, factor + 1);
        }
        return;
      }
      const std::size_t idx = static_cast<std::size_t>(length - 1);
      const int cap = std::min(budget[idx], remaining / length);
      for (int take = 0; take <= cap; ++take) {
        row[idx] = take;
        budget[idx] -= take;
        again(again, length - 1, remaining - take * length);
        budget[idx] += take;
      }
      row[idx] = 0;
    };
    choose(choose, std::min(max_length, target), target);
  };
  place_factor(place_factor, 0);
  return out;
}

BigInt intersection_count(const Partition& lambda, const CycleType& rho) {
  require_same_weight(lambda, rho, "intersection_count");
  BigInt total = 0;
  for (const Distribution& distribution : enumerate_distributions(lambda, rho)) {
    BigInt term = 1;
    for (int i = 0; i < lambda.part_count(); ++i) {
      term *= class_size(lambda.part(i),
                         distribution.rows[static_cast<std::size_t>(i)]);
    }
    total += term;
  }
  return total;
}

}  // namespace caputkit
