#pragma once

#include <gmpxx.h>

namespace caputkit {

// Every count in this library is an exact integer; GMP supplies the
// arithmetic so factorials and character values never overflow.
using BigInt = mpz_class;

// Division that must leave no remainder. The identities this library
// computes guarantee exactness, so a remainder means an internal bug and
// raises std::logic_error rather than a user-facing error.
BigInt exact_div(const BigInt& numerator, const BigInt& denominator);

BigInt factorial(int n);        // n!, n >= 0
BigInt binomial(int n, int k);  // C(n, k); 0 when k < 0 or k > n
BigInt pow2(int e);             // 2^e, e >= 0

}  // namespace caputkit
