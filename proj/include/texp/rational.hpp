#pragma once

#include <gmp.h>

#include <string>

#include "texp/bigfloat.hpp"

namespace texp {

// Exact rational, used for the z inputs and for seed rationalization.
class BigRational {
 public:
  BigRational() { mpq_init(q_); }
  BigRational(long num, long den);
  explicit BigRational(const std::string& text);  // "p", "p/q", or a plain decimal
  BigRational(const BigRational& o) { mpq_init(q_); mpq_set(q_, o.q_); }
  BigRational(BigRational&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
  BigRational& operator=(const BigRational& o) { if (this != &o) mpq_set(q_, o.q_); return *this; }
  BigRational& operator=(BigRational&& o) noexcept { if (this != &o) mpq_swap(q_, o.q_); return *this; }
  ~BigRational() { mpq_clear(q_); }

  static BigRational from_decimal(const std::string& decimal);

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sign() const { return mpq_sgn(q_); }
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
  int compare_si(long num, long den) const { return mpq_cmp_si(q_, num, den); }
  int compare(const BigRational& o) const { return mpq_cmp(q_, o.q_); }
  bool operator==(const BigRational& o) const { return mpq_equal(q_, o.q_) != 0; }

  BigRational negated() const;
  friend BigRational operator+(const BigRational& a, const BigRational& b);
  friend BigRational operator-(const BigRational& a, const BigRational& b);

  // Deterministic conversion: correctly rounded to `digits` decimal precision.
  BigFloat to_bigfloat(int digits) const;

  std::string numerator() const;
  std::string denominator() const;
  std::string to_string() const;  // "p/q" (or "p" when q == 1)

 private:
  mpq_t q_;
};

}  // namespace texp
