#include <stdexcept>
#include <vector>

#include "caputkit/induced.hpp"
#include "caputkit/oracle.hpp"
#include "caputkit/sym_group.hpp"
#include "caputkit/verify.hpp"
#include "caputkit/young.hpp"
#include "doctest.h"
#include "testutil.hpp"

using caputkit::BigInt;
using caputkit::CharacterMatrix;
using caputkit::CycleType;
using caputkit::Partition;
using testutil::cls;
using testutil::part;

namespace {

std::vector<CycleType> column_order(int n) {
  const auto rows = caputkit::enumerate_partitions(n);
  std::vector<CycleType> cols;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    cols.push_back(caputkit::partition_to_cycle_type(*it));
  return cols;
}

}  // namespace

TEST_CASE("the worked row for S3 x S2 inside S5") {
  const Partition lambda = part({3, 2});
  const std::vector<BigInt> expected = {10, 4, 2, 1, 1, 0, 0};
  const auto cols = column_order(5);
  REQUIRE(cols.size() == expected.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    CAPTURE(caputkit::render_cycle_type(cols[i]));
    CHECK(caputkit::induced_value_quotient(lambda, cols[i]) == expected[i]);
    CHECK(caputkit::induced_value_multinomial(lambda, cols[i]) == expected[i]);
  }
}

TEST_CASE("row (4,1) of the n=5 table") {
  const std::vector<BigInt> expected = {5, 3, 1, 2, 0, 1, 0};
  const auto cols = column_order(5);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    CHECK(caputkit::induced_value_quotient(part({4, 1}), cols[i]) == expected[i]);
  }
}

TEST_CASE("the whole group induces the all-ones row") {
  for (int n = 1; n <= 8; ++n) {
    for (const CycleType& rho : column_order(n)) {
      CHECK(caputkit::induced_value_quotient(part({n}), rho) == 1);
    }
  }
}

TEST_CASE("multinomial route examples") {
  CHECK(caputkit::induced_value_multinomial(part({3, 2}), cls({2, 1, 1, 1})) == 4);
  CHECK(caputkit::induced_value_multinomial(part({3, 2}), cls({5})) == 0);
  CHECK(caputkit::induced_value_multinomial(part({1, 1, 1, 1, 1, 1}),
                                            cls({1, 1, 1, 1, 1, 1})) == 720);
}

TEST_CASE("n=5 matrix equals the pinned fixture") {
  CHECK(caputkit::character_matrix(5) == caputkit::reference_matrix_n5());
}

TEST_CASE("tiny matrices") {
  const CharacterMatrix one = caputkit::character_matrix(1);
  REQUIRE(one.dimension() == 1);
  CHECK(one.value(0, 0) == 1);
  const CharacterMatrix zero = caputkit::character_matrix(0);
  REQUIRE(zero.dimension() == 1);
  CHECK(zero.value(0, 0) == 1);
}

TEST_CASE("first column of the n=6 table is the multinomial sequence") {
  const std::vector<BigInt> expected = {1,  6,  15, 30,  20,  60,
                                        120, 90, 180, 360, 720};
  const CharacterMatrix m = caputkit::character_matrix(6);
  REQUIRE(m.dimension() == 11);
  for (int r = 0; r < m.dimension(); ++r) {
    CHECK(m.value(r, 0) == expected[static_cast<std::size_t>(r)]);
  }
}

TEST_CASE("identity column equals the subgroup index for n <= 9") {
  for (int n = 1; n <= 9; ++n) {
    const CycleType identity = cls(std::vector<int>(n, 1));
    for (const Partition& lambda : caputkit::enumerate_partitions(n)) {
      CHECK(caputkit::induced_value_quotient(lambda, identity) ==
            caputkit::exact_div(caputkit::group_order(n),
                                caputkit::young_order(lambda)));
    }
  }
}

TEST_CASE("quotient and multinomial routes agree everywhere up to n=9") {
  for (int n = 0; n <= 9; ++n) {
    const auto labels = caputkit::enumerate_partitions(n);
    for (const Partition& lambda : labels) {
      for (const Partition& label : labels) {
        const CycleType rho = caputkit::partition_to_cycle_type(label);
        CAPTURE(n);
        CAPTURE(caputkit::render_partition(lambda));
        CAPTURE(caputkit::render_cycle_type(rho));
        CHECK(caputkit::induced_value_quotient(lambda, rho) ==
              caputkit::induced_value_multinomial(lambda, rho));
      }
    }
  }
}

TEST_CASE("reciprocity: the weighted row sum is n! up to n=9") {
  for (int n = 0; n <= 9; ++n) {
    const auto cols = column_order(n);
    for (const Partition& lambda : caputkit::enumerate_partitions(n)) {
      BigInt sum = 0;
      for (const CycleType& rho : cols) {
        sum += caputkit::class_size(n, rho) *
               caputkit::induced_value_quotient(lambda, rho);
      }
      CAPTURE(n);
      CAPTURE(caputkit::render_partition(lambda));
      CHECK(sum == caputkit::group_order(n));
    }
  }
}

TEST_CASE("zero pattern matches the independent splitter up to n=9") {
  for (int n = 0; n <= 9; ++n) {
    const auto labels = caputkit::enumerate_partitions(n);
    for (const Partition& lambda : labels) {
      for (const Partition& label : labels) {
        const CycleType rho = caputkit::partition_to_cycle_type(label);
        const bool zero = caputkit::induced_value_quotient(lambda, rho) == 0;
        CAPTURE(caputkit::render_partition(lambda));
        CAPTURE(caputkit::render_cycle_type(rho));
        CHECK(zero == !testutil::splittable(lambda, rho));
      }
    }
  }
}

TEST_CASE("column labels are the reversed row labels") {
  for (int n : {1, 4, 7}) {
    const CharacterMatrix m = caputkit::character_matrix(n);
    const int dim = m.dimension();
    for (int c = 0; c < dim; ++c) {
      CHECK(m.col_labels[static_cast<std::size_t>(c)] ==
            caputkit::partition_to_cycle_type(
                m.row_labels[static_cast<std::size_t>(dim - 1 - c)]));
    }
  }
}

TEST_CASE("matrix rows and columns honor the boundary patterns") {
  const CharacterMatrix m = caputkit::character_matrix(7);
  const int dim = m.dimension();
  for (int c = 0; c < dim; ++c) {
    CHECK(m.value(0, c) == 1);                       // lambda = (n)
    CHECK(m.value(dim - 1, c) == (c == 0 ? 5040 : 0));  // lambda = (1^n)
  }
}

TEST_CASE("matrix values agree with direct counting for n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    const CharacterMatrix m = caputkit::character_matrix(n);
    for (int r = 0; r < m.dimension(); ++r) {
      for (int c = 0; c < m.dimension(); ++c) {
        CHECK(m.value(r, c) ==
              caputkit::oracle_induced_value(
                  m.row_labels[static_cast<std::size_t>(r)],
                  m.col_labels[static_cast<std::size_t>(c)]));
      }
    }
  }
}

TEST_CASE("spot checks against direct counting at n=7") {
  CHECK(caputkit::induced_value_quotient(part({4, 3}), cls({3, 2, 2})) ==
        caputkit::oracle_induced_value(part({4, 3}), cls({3, 2, 2})));
  CHECK(caputkit::induced_value_quotient(part({3, 2, 2}), cls({4, 2, 1})) ==
        caputkit::oracle_induced_value(part({3, 2, 2}), cls({4, 2, 1})));
  CHECK(caputkit::induced_value_quotient(part({2, 2, 2, 1}), cls({2, 2, 2, 1})) ==
        caputkit::oracle_induced_value(part({2, 2, 2, 1}), cls({2, 2, 2, 1})));
}

TEST_CASE("cross-check flag runs clean") {
  caputkit::MatrixOptions options;
  options.cross_check = true;
  CHECK_NOTHROW(caputkit::character_matrix(6, options));
}

TEST_CASE("weight mismatches are rejected") {
  CHECK_THROWS_AS(caputkit::induced_value_quotient(part({3, 2}), cls({3, 3})),
                  std::invalid_argument);
  CHECK_THROWS_AS(caputkit::induced_value_multinomial(part({3}), cls({2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(caputkit::character_matrix(-1), std::invalid_argument);
}
