#include "caputkit/bigint.hpp"

#include <stdexcept>

namespace caputkit {

BigInt exact_div(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0 ||
      !mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
    throw std::logic_error("exact_div: " + numerator.get_str() +
                           " is not divisible by " + denominator.get_str());
  }
  BigInt quotient;
  mpz_divexact(quotient.get_mpz_t(), numerator.get_mpz_t(),
               denominator.get_mpz_t());
  return quotient;
}

BigInt factorial(int n) {
  if (n < 0) {
    throw std::invalid_argument("factorial: n must be >= 0, got " +
                                std::to_string(n));
  }
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

BigInt binomial(int n, int k) {
  if (n < 0) {
    throw std::invalid_argument("binomial: n must be >= 0, got " +
                                std::to_string(n));
  }
  if (k < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

BigInt pow2(int e) {
  if (e < 0) {
    throw std::invalid_argument("pow2: exponent must be >= 0, got " +
                                std::to_string(e));
  }
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return result;
}

}  // namespace caputkit
