#include "caputkit/induced.hpp"
#include "caputkit/verify.hpp"
#include "doctest.h"

using caputkit::CharacterMatrix;
using caputkit::Execution;
using caputkit::MatrixOptions;

TEST_CASE("openmp matrix fill reproduces the serial reference") {
  for (int n : {5, 8, 9}) {
    MatrixOptions serial;
    serial.execution = Execution::serial;
    serial.cross_check = false;
    MatrixOptions openmp = serial;
    openmp.execution = Execution::openmp;
    CAPTURE(n);
    CHECK(caputkit::character_matrix(n, serial) ==
          caputkit::character_matrix(n, openmp));
  }
}

TEST_CASE("repeated openmp builds are deterministic") {
  MatrixOptions options;
  options.cross_check = false;
  const CharacterMatrix first = caputkit::character_matrix(8, options);
  const CharacterMatrix second = caputkit::character_matrix(8, options);
  CHECK(first == second);
}

TEST_CASE("serial and openmp verification sweeps agree") {
  caputkit::VerifyOptions serial;
  serial.execution = Execution::serial;
  caputkit::VerifyOptions openmp;
  openmp.execution = Execution::openmp;
  const caputkit::VerifyReport a = caputkit::run_verification(5, serial);
  const caputkit::VerifyReport b = caputkit::run_verification(5, openmp);
  CHECK(a.passed);
  CHECK(b.passed);
  REQUIRE(a.levels.size() == b.levels.size());
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    CHECK(a.levels[i].n == b.levels[i].n);
    CHECK(a.levels[i].pairs == b.levels[i].pairs);
    CHECK(a.levels[i].passed == b.levels[i].passed);
    CHECK(a.levels[i].fixture_checked == b.levels[i].fixture_checked);
  }
}
