#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>

namespace dagforge {

// Exact arbitrary-precision arithmetic. Counts grow like 2^(n(n-1)/2), so
// fixed-width integers are never used for table entries.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt pow2(unsigned long e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

// base^e with the 0^0 = 1 convention (GMP's native behaviour)
inline BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigRat rat_pow(const BigRat& base, unsigned long e) {
  BigRat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// bits needed to write v in binary; 0 for v == 0
inline std::size_t bit_length(const BigInt& v) {
  return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

// L = n(n-1)/2, the maximum possible arc count
inline unsigned long max_arcs(unsigned long n) { return n * (n - 1) / 2; }

}  // namespace dagforge
