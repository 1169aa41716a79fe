#include <stdexcept>
#include <vector>

#include "caputkit/partition.hpp"
#include "doctest.h"
#include "testutil.hpp"

using caputkit::CycleType;
using caputkit::Partition;
using testutil::cls;
using testutil::part;

TEST_CASE("partitions of 5 come out in the pinned order") {
  const std::vector<Partition> expected = {
      part({5}),       part({4, 1}),       part({3, 2}),       part({3, 1, 1}),
      part({2, 2, 1}), part({2, 1, 1, 1}), part({1, 1, 1, 1, 1}),
  };
  CHECK(caputkit::enumerate_partitions(5) == expected);
}

TEST_CASE("zero has exactly the empty partition") {
  const std::vector<Partition> out = caputkit::enumerate_partitions(0);
  REQUIRE(out.size() == 1);
  CHECK(out[0].empty());
  CHECK(out[0].weight() == 0);
}

TEST_CASE("p(8) agrees with the multiplicity-equation count") {
  CHECK(testutil::count_multiplicity_solutions(8) == 22);
  CHECK(caputkit::enumerate_partitions(8).size() == 22);
}

TEST_CASE("partition counts match the independent count up to 12") {
  for (int n = 0; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(static_cast<long long>(caputkit::enumerate_partitions(n).size()) ==
          testutil::count_multiplicity_solutions(n));
  }
}

TEST_CASE("enumeration is strictly decreasing lexicographically") {
  for (int n = 0; n <= 12; ++n) {
    const std::vector<Partition> out = caputkit::enumerate_partitions(n);
    for (std::size_t i = 1; i < out.size(); ++i) {
      CAPTURE(n);
      CAPTURE(i);
      CHECK(out[i - 1] > out[i]);
    }
  }
}

TEST_CASE("cycle-type round trip is the identity up to 12") {
  for (int n = 0; n <= 12; ++n) {
    for (const Partition& p : caputkit::enumerate_partitions(n)) {
      CHECK(caputkit::cycle_type_to_partition(caputkit::partition_to_cycle_type(p)) == p);
    }
  }
}

TEST_CASE("conversion examples") {
  CHECK(caputkit::partition_to_cycle_type(part({2, 1, 1, 1})) == CycleType({3, 1}));
  CHECK(caputkit::partition_to_cycle_type(Partition()) == CycleType());
  CHECK(caputkit::partition_to_cycle_type(part({3, 2})) == CycleType({0, 1, 1}));
  CHECK(caputkit::cycle_type_to_partition(CycleType({3, 1})) == part({2, 1, 1, 1}));
  CHECK(caputkit::cycle_type_to_partition(CycleType()) == Partition());
  CHECK(caputkit::cycle_type_to_partition(CycleType({0, 0, 0, 0, 1})) == part({5}));
}

TEST_CASE("cycle types canonicalize by trimming trailing zeros") {
  CHECK(CycleType({3, 1, 0, 0}) == CycleType({3, 1}));
  CHECK(CycleType({0, 0}) == CycleType());
  CHECK(CycleType({3, 1}).weight() == 5);
  CHECK(CycleType({3, 1}).multiplicity(1) == 3);
  CHECK(CycleType({3, 1}).multiplicity(7) == 0);
}

TEST_CASE("invalid constructions are rejected") {
  CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(CycleType({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(caputkit::enumerate_partitions(-1), std::invalid_argument);
}

TEST_CASE("parser accepts the exponent syntax") {
  CHECK(caputkit::parse_partition("3,2") == part({3, 2}));
  CHECK(caputkit::parse_partition("2^2,1") == part({2, 2, 1}));
  CHECK(caputkit::parse_partition("1^5") == part({1, 1, 1, 1, 1}));
  CHECK(caputkit::parse_partition("2,1^3") == part({2, 1, 1, 1}));
  CHECK(caputkit::parse_partition("5") == part({5}));
  CHECK(caputkit::parse_partition("4,4,2") == part({4, 4, 2}));
  CHECK(caputkit::parse_partition("12,10^2,3") == part({12, 10, 10, 3}));
}

TEST_CASE("parser rejects malformed text and names the token") {
  CHECK_THROWS_AS(caputkit::parse_partition(""), std::invalid_argument);
  CHECK_THROWS_AS(caputkit::parse_partition("2,3"), std::invalid_argument);
  CHECK_THROWS_AS(caputkit::parse_partition("3, 2"), std::invalid_argument);
  CHECK_THROWS_AS(caputkit::parse_partition("a"), std::invalid_argument);
  CHECK_THROWS_AS(caputkit::parse_partition("3,,2"), std::invalid_argument);
  CHECK_THROWS_AS(caputkit::parse_partition("0"), std::invalid_argument);
  CHECK_THROWS_AS(caputkit::parse_partition("2^0"), std::invalid_argument);
  CHECK_THROWS_AS(caputkit::parse_partition("03"), std::invalid_argument);
  CHECK_THROWS_AS(caputkit::parse_partition("3^"), std::invalid_argument);
  CHECK_THROWS_AS(caputkit::parse_partition("^3"), std::invalid_argument);
  CHECK_THROWS_AS(caputkit::parse_partition("5,"), std::invalid_argument);
  CHECK_THROWS_AS(caputkit::parse_partition("2^2^2"), std::invalid_argument);

  try {
    caputkit::parse_partition("3,x,1");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("\"x\"") != std::string::npos);
  }
  try {
    caputkit::parse_partition("1,3");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("weakly decreasing") != std::string::npos);
  }
}

TEST_CASE("rendering and parsing are inverse over all partitions up to 10") {
  for (int n = 1; n <= 10; ++n) {
    for (const Partition& p : caputkit::enumerate_partitions(n)) {
      CHECK(caputkit::parse_partition(caputkit::render_partition(p)) == p);
    }
  }
}

TEST_CASE("rendering examples") {
  CHECK(caputkit::render_partition(part({2, 1, 1, 1})) == "2,1^3");
  CHECK(caputkit::render_partition(part({3, 2})) == "3,2");
  CHECK(caputkit::render_partition(Partition()) == "-");
  CHECK(caputkit::render_cycle_type(cls({2, 1, 1, 1})) == "1^3,2");
  CHECK(caputkit::render_cycle_type(cls({5})) == "5");
  CHECK(caputkit::render_cycle_type(cls({2, 2, 1})) == "1,2^2");
  CHECK(caputkit::render_cycle_type(CycleType()) == "-");
}
