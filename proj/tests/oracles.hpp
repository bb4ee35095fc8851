#pragma once

// Independent oracles for the test suites. Nothing here reuses the library's
// evaluation path for the quantity it checks.

#include <gmp.h>

#include <complex>
#include <cstdint>
#include <string>

#include "texp/complex.hpp"

namespace oracle {

// ln 2 from the series sum 1/(k 2^k), fixed-point integer arithmetic.
// Good to ~`digits` + 6 decimal places.
inline texp::BigFloat ln2(int digits) {
  const unsigned long scale_exp = static_cast<unsigned long>(digits) + 10;
  mpz_t scale, acc, term, den;
  mpz_inits(scale, acc, term, den, nullptr);
  mpz_ui_pow_ui(scale, 10, scale_exp);
  mpz_set_ui(acc, 0);
  for (unsigned long k = 1;; ++k) {
    mpz_set_ui(den, k);
    mpz_mul_2exp(den, den, k);  // k * 2^k
    mpz_fdiv_q(term, scale, den);
    if (mpz_sgn(term) == 0) break;
    mpz_add(acc, acc, term);
  }
  char* s = mpz_get_str(nullptr, 10, acc);
  std::string digits_str(s);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(s, digits_str.size() + 1);
  mpz_clears(scale, acc, term, den, nullptr);

  texp::BigFloat value(digits_str, digits + 6);
  return value * texp::pow10(-static_cast<long>(scale_exp), digits + 6);
}

// Deterministic 64-bit generator (splitmix64); identical on every platform.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  long integer(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

// Double-precision composite log for cross-checks of branch dispatch.
inline std::complex<double> plog_d(std::complex<double> w, long long n, long long m,
                                   std::complex<double> logz) {
  const double two_pi = 6.283185307179586476925286766559;
  std::complex<double> inner =
      (std::log(w) + std::complex<double>(0, two_pi * static_cast<double>(n))) / logz;
  return (std::log(inner) + std::complex<double>(0, two_pi * static_cast<double>(m))) / logz;
}

// Principal fixed point of w = z^w via double Newton (for T1 checks).
inline std::complex<double> t1_fixed_point_d(std::complex<double> logz) {
  std::complex<double> w(0.6, 0.4 * (std::imag(logz) >= 0 ? 1.0 : -1.0));
  for (int i = 0; i < 200; ++i) {
    std::complex<double> f = w - std::log(w) / logz;
    std::complex<double> den = 1.0 - 1.0 / (w * logz);
    if (std::abs(den) < 1e-15) break;
    w -= f / den;
    if (std::abs(f) < 1e-13) break;
  }
  return w;
}

}  // namespace oracle
