#include "caputkit/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace caputkit {

namespace {

void require_within_bound(int n, int bound, const char* who) {
  if (n > bound) {
    throw std::domain_error(std::string(who) + ": n=" + std::to_string(n) +
                            " exceeds the oracle bound " + std::to_string(bound));
  }
}

CycleType cycle_type_of_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<int> mult(static_cast<std::size_t>(n), 0);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int length = 0;
    int point = start;
    do {
      seen[static_cast<std::size_t>(point)] = true;
      point = images[static_cast<std::size_t>(point)];
      ++length;
    } while (point != start);
    ++mult[static_cast<std::size_t>(length - 1)];
  }
  return CycleType(std::move(mult));
}

}  // namespace

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int value : images_) {
    if (value < 0 || value >= n || seen[static_cast<std::size_t>(value)])
      throw std::invalid_argument("Perm: image table is not a bijection");
    seen[static_cast<std::size_t>(value)] = true;
  }
}

Perm Perm::identity(int n) {
  if (n < 0) throw std::invalid_argument("Perm::identity: n must be >= 0");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Perm(std::move(images));
}

CycleType cycle_type_of(const Perm& p) { return cycle_type_of_images(p.images()); }

Perm class_representative(const CycleType& rho) {
  std::vector<int> images(static_cast<std::size_t>(rho.weight()));
  int offset = 0;
  for (int length = rho.max_cycle_length(); length >= 1; --length) {
    for (int c = 0; c < rho.multiplicity(length); ++c) {
      for (int t = 0; t < length; ++t) {
        images[static_cast<std::size_t>(offset + t)] = offset + (t + 1) % length;
      }
      offset += length;
    }
  }
  return Perm(std::move(images));
}

Perm conjugate(const Perm& p, const Perm& by) {
  if (p.degree() != by.degree())
    throw std::invalid_argument("conjugate: degrees differ");
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) {
    images[static_cast<std::size_t>(by(x))] = by(p(x));
  }
  return Perm(std::move(images));
}

void for_each_ordered_set_partition(
    const Partition& lambda,
    const std::function<void(const OrderedSetPartition&)>& visit) {
  const int part_count = lambda.part_count();
  OrderedSetPartition osp;
  osp.blocks.resize(static_cast<std::size_t>(part_count));

  auto choose_block = [&](auto&& self, int block,
                          const std::vector<int>& remaining) -> void {
    if (block == part_count) {
      visit(osp);
      return;
    }
    const int size = lambda.part(block);
    std::vector<int> picked_index(static_cast<std::size_t>(size));
    auto pick = [&](auto&& again, int start, int depth) -> void {
      if (depth == size) {
        std::vector<int>& chosen = osp.blocks[static_cast<std::size_t>(block)];
        chosen.clear();
        for (int idx : picked_index)
          chosen.push_back(remaining[static_cast<std::size_t>(idx)]);
        std::vector<int> rest;
        rest.reserve(remaining.size() - static_cast<std::size_t>(size));
        int next_picked = 0;
        for (int i = 0; i < static_cast<int>(remaining.size()); ++i) {
          if (next_picked < size && picked_index[static_cast<std::size_t>(next_picked)] == i) {
            ++next_picked;
          } else {
            rest.push_back(remaining[static_cast<std::size_t>(i)]);
          }
        }
        self(self, block + 1, rest);
        return;
      }
      for (int i = start; i <= static_cast<int>(remaining.size()) - (size - depth); ++i) {
        picked_index[static_cast<std::size_t>(depth)] = i;
        again(again, i + 1, depth + 1);
      }
    };
    pick(pick, 0, 0);
  };

  std::vector<int> all(static_cast<std::size_t>(lambda.weight()));
  std::iota(all.begin(), all.end(), 0);
  choose_block(choose_block, 0, all);
}

std::vector<OrderedSetPartition> enumerate_ordered_set_partitions(
    const Partition& lambda) {
  std::vector<OrderedSetPartition> out;
  for_each_ordered_set_partition(
      lambda, [&](const OrderedSetPartition& osp) { out.push_back(osp); });
  return out;
}

BigInt oracle_class_size(int n, const CycleType& rho, int bound) {
  if (n < 0) throw std::invalid_argument("oracle_class_size: n must be >= 0");
  require_within_bound(n, bound, "oracle_class_size");
  if (rho.weight() != n) {
    throw std::invalid_argument("oracle_class_size: class " +
                                render_cycle_type(rho) + " has weight " +
                                std::to_string(rho.weight()) + ", expected " +
                                std::to_string(n));
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  long count = 0;
  do {
    if (cycle_type_of_images(images) == rho) ++count;
  } while (std::next_permutation(images.begin(), images.end()));
  return BigInt(count);
}

BigInt oracle_intersection_count(const Partition& lambda, const CycleType& rho,
                                 int bound) {
  require_within_bound(lambda.weight(), bound, "oracle_intersection_count");
  if (lambda.weight() != rho.weight()) {
    throw std::invalid_argument(
        "oracle_intersection_count: weights differ: " +
        render_partition(lambda) + " vs " + render_cycle_type(rho));
  }
  const int n = lambda.weight();
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  long count = 0;

  // Walk the subgroup element by element: each factor permutes only its own
  // block of consecutive points.
  auto per_block = [&](auto&& self, int block, int offset) -> void {
    if (block == lambda.part_count()) {
      if (cycle_type_of_images(images) == rho) ++count;
      return;
    }
    const int size = lambda.part(block);
    std::vector<int> block_images(static_cast<std::size_t>(size));
    std::iota(block_images.begin(), block_images.end(), offset);
    do {
      std::copy(block_images.begin(), block_images.end(),
                images.begin() + offset);
      self(self, block + 1, offset + size);
    } while (std::next_permutation(block_images.begin(), block_images.end()));
  };
  per_block(per_block, 0, 0);
  return BigInt(count);
}

BigInt fixed_partition_count(const Partition& lambda, const Perm& p) {
  if (lambda.weight() != p.degree()) {
    throw std::invalid_argument("fixed_partition_count: partition weight " +
                                std::to_string(lambda.weight()) +
                                " differs from permutation degree " +
                                std::to_string(p.degree()));
  }
  const int n = p.degree();
  long count = 0;
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  for_each_ordered_set_partition(lambda, [&](const OrderedSetPartition& osp) {
    for (int b = 0; b < static_cast<int>(osp.blocks.size()); ++b) {
      for (int x : osp.blocks[static_cast<std::size_t>(b)])
        block_of[static_cast<std::size_t>(x)] = b;
    }
    for (int x = 0; x < n; ++x) {
      if (block_of[static_cast<std::size_t>(p(x))] !=
          block_of[static_cast<std::size_t>(x)])
        return;
    }
    ++count;
  });
  return BigInt(count);
}

BigInt oracle_induced_value(const Partition& lambda, const CycleType& rho,
                            int bound) {
  require_within_bound(lambda.weight(), bound, "oracle_induced_value");
  if (lambda.weight() != rho.weight()) {
    throw std::invalid_argument("oracle_induced_value: weights differ: " +
                                render_partition(lambda) + " vs " +
                                render_cycle_type(rho));
  }
  return fixed_partition_count(lambda, class_representative(rho));
}

}  // namespace caputkit
