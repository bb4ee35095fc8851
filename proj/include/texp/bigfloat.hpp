#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace texp {

// Precision is counted in significant decimal digits throughout the library.
// Internally values are MPFR binary floats carrying a few guard bits beyond
// the requested decimal precision; every operation rounds to nearest/even.
inline constexpr int kMinPrecDigits = 10;
inline constexpr int kMaxPrecDigits = 1000;

mpfr_prec_t bits_for_digits(int digits);
int clamp_digits(int digits);

// Value type over mpfr_t. Binary operations between operands of different
// decimal precision produce a result at the minimum of the two.
class BigFloat {
 public:
  BigFloat() : digits_(kMinPrecDigits) { mpfr_init2(v_, bits_for_digits(digits_)); mpfr_set_zero(v_, 1); }
  explicit BigFloat(int digits) : digits_(clamp_digits(digits)) {
    mpfr_init2(v_, bits_for_digits(digits_));
    mpfr_set_zero(v_, 1);
  }
  BigFloat(long value, int digits) : BigFloat(digits) { mpfr_set_si(v_, value, MPFR_RNDN); }
  BigFloat(double value, int digits) : BigFloat(digits) { mpfr_set_d(v_, value, MPFR_RNDN); }
  BigFloat(const std::string& decimal, int digits) : BigFloat(digits) {
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0 && !looks_numeric(decimal))
      throw std::invalid_argument("BigFloat: unparseable decimal string: " + decimal);
  }

  BigFloat(const BigFloat& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
      digits_ = o.digits_;
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) { mpfr_swap(v_, o.v_); digits_ = o.digits_; }
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  int digits() const { return digits_; }
  const mpfr_t& raw() const { return v_; }
  mpfr_t& raw() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_negative() const { return mpfr_sgn(v_) < 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Decimal serialization at this value's own precision; parses back exactly.
  std::string to_string() const { return to_string(digits_); }
  std::string to_string(int digits) const;

  int compare(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  int compare_si(long s) const { return mpfr_cmp_si(v_, s); }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.compare(b) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.compare(b) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.compare(b) > 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.compare(b) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return a.compare(b) == 0; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);

  BigFloat& operator+=(const BigFloat& o) { *this = *this + o; return *this; }
  BigFloat& operator-=(const BigFloat& o) { *this = *this - o; return *this; }
  BigFloat& operator*=(const BigFloat& o) { *this = *this * o; return *this; }
  BigFloat& operator/=(const BigFloat& o) { *this = *this / o; return *this; }

 private:
  static bool looks_numeric(const std::string& s);
  mpfr_t v_;
  int digits_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);           // x > 0
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat const_pi(int digits);
BigFloat pow10(long exponent, int digits);  // 10^exponent
BigFloat mul_si(const BigFloat& x, long s);
BigFloat from_si(long s, int digits);

}  // namespace texp
