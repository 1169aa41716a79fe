// Compares the serial reference kernels against their OpenMP versions:
// character-matrix fill and the verification sweep. Results must match
// exactly; timings show whatever the hardware offers.
//
// Usage: caput-bench [n] [repeats]   (defaults: n=12, repeats=3)

#include <omp.h>

#include <cstdlib>
#include <iostream>
#include <string>

#include "caputkit/induced.hpp"
#include "caputkit/verify.hpp"

namespace {

double best_of(int repeats, double (*run)(int), int n) {
  double best = 0.0;
  for (int i = 0; i < repeats; ++i) {
    const double t = run(n);
    if (i == 0 || t < best) best = t;
  }
  return best;
}

double time_matrix(int n, caputkit::Execution execution) {
  caputkit::MatrixOptions options;
  options.execution = execution;
  options.cross_check = false;
  const double start = omp_get_wtime();
  const caputkit::CharacterMatrix m = caputkit::character_matrix(n, options);
  const double elapsed = omp_get_wtime() - start;
  if (m.dimension() == 0) std::exit(1);  // keep the call alive
  return elapsed;
}

double time_matrix_serial(int n) { return time_matrix(n, caputkit::Execution::serial); }
double time_matrix_openmp(int n) { return time_matrix(n, caputkit::Execution::openmp); }

double time_verify(int n, caputkit::Execution execution) {
  caputkit::VerifyOptions options;
  options.execution = execution;
  const double start = omp_get_wtime();
  const caputkit::VerifyReport report = caputkit::run_verification(n, options);
  const double elapsed = omp_get_wtime() - start;
  if (!report.passed) {
    std::cerr << "verification failed during benchmark\n";
    std::exit(1);
  }
  return elapsed;
}

double time_verify_serial(int n) { return time_verify(n, caputkit::Execution::serial); }
double time_verify_openmp(int n) { return time_verify(n, caputkit::Execution::openmp); }

}  // namespace

int main(int argc, char** argv) {
  int n = 12;
  int repeats = 3;
  if (argc > 1) n = std::atoi(argv[1]);
  if (argc > 2) repeats = std::atoi(argv[2]);
  if (n < 1 || n > 24 || repeats < 1 || repeats > 100) {
    std::cerr << "usage: caput-bench [n in 1..24] [repeats in 1..100]\n";
    return 2;
  }

  std::cout << "threads available: " << omp_get_max_threads() << "\n";

  {
    caputkit::MatrixOptions serial_opts;
    serial_opts.execution = caputkit::Execution::serial;
    serial_opts.cross_check = false;
    caputkit::MatrixOptions openmp_opts = serial_opts;
    openmp_opts.execution = caputkit::Execution::openmp;
    if (caputkit::character_matrix(n, serial_opts) !=
        caputkit::character_matrix(n, openmp_opts)) {
      std::cerr << "serial and openmp character matrices differ\n";
      return 1;
    }
    const double serial = best_of(repeats, time_matrix_serial, n);
    const double openmp = best_of(repeats, time_matrix_openmp, n);
    std::cout << "character_matrix n=" << n << "  serial " << serial
              << " s  openmp " << openmp << " s  speedup "
              << (openmp > 0 ? serial / openmp : 0.0) << "x\n";
  }

  {
    const int verify_n = std::min(n, 6);
    const double serial = best_of(repeats, time_verify_serial, verify_n);
    const double openmp = best_of(repeats, time_verify_openmp, verify_n);
    std::cout << "verification sweep n<=" << verify_n << "  serial " << serial
              << " s  openmp " << openmp << " s  speedup "
              << (openmp > 0 ? serial / openmp : 0.0) << "x\n";
  }
  return 0;
}
