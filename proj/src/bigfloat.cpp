#include "texp/bigfloat.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>

namespace texp {

mpfr_prec_t bits_for_digits(int digits) {
  // log2(10) = 3.3219...; eight guard bits keep decimal round-trips exact.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

int clamp_digits(int digits) {
  if (digits < kMinPrecDigits || digits > kMaxPrecDigits)
    throw std::invalid_argument("precision out of range [" + std::to_string(kMinPrecDigits) +
                                ", " + std::to_string(kMaxPrecDigits) + "]: " + std::to_string(digits));
  return digits;
}

bool BigFloat::looks_numeric(const std::string& s) {
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)) && std::strchr("+-.eE", ch) == nullptr) return false;
  return !s.empty();
}

namespace {

int min_digits(const BigFloat& a, const BigFloat& b) { return std::min(a.digits(), b.digits()); }

template <typename F>
BigFloat binary_op(const BigFloat& a, const BigFloat& b, F f) {
  BigFloat r(min_digits(a, b));
  f(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

template <typename F>
BigFloat unary_op(const BigFloat& a, F f) {
  BigFloat r(a.digits());
  f(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary_op(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary_op(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary_op(a, b, mpfr_mul); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binary_op(a, b, mpfr_div); }
BigFloat operator-(const BigFloat& a) { return unary_op(a, mpfr_neg); }

BigFloat abs(const BigFloat& x) { return unary_op(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary_op(x, mpfr_sqrt); }
BigFloat exp(const BigFloat& x) { return unary_op(x, mpfr_exp); }
BigFloat log(const BigFloat& x) {
  if (x.sign() <= 0) throw std::domain_error("log: nonpositive argument");
  return unary_op(x, mpfr_log);
}
BigFloat sin(const BigFloat& x) { return unary_op(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary_op(x, mpfr_cos); }
BigFloat atan(const BigFloat& x) { return unary_op(x, mpfr_atan); }
BigFloat atan2(const BigFloat& y, const BigFloat& x) { return binary_op(y, x, mpfr_atan2); }
BigFloat hypot(const BigFloat& x, const BigFloat& y) { return binary_op(x, y, mpfr_hypot); }

BigFloat const_pi(int digits) {
  BigFloat r(digits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow10(long exponent, int digits) {
  BigFloat r(digits);
  mpfr_set_si(r.raw(), 10, MPFR_RNDN);
  mpfr_pow_si(r.raw(), r.raw(), exponent, MPFR_RNDN);
  return r;
}

BigFloat mul_si(const BigFloat& x, long s) {
  BigFloat r(x.digits());
  mpfr_mul_si(r.raw(), x.raw(), s, MPFR_RNDN);
  return r;
}

BigFloat from_si(long s, int digits) { return BigFloat(s, digits); }

std::string BigFloat::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return "0";

  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);

  bool neg = false;
  if (!mant.empty() && mant[0] == '-') { neg = true; mant.erase(0, 1); }
  // Value is 0.mant x 10^e. Strip trailing zeros but keep at least one digit.
  size_t last = mant.find_last_not_of('0');
  mant.erase(last + 1);
  if (mant.empty()) mant = "0";

  std::string out;
  long k = static_cast<long>(e);
  long ndig = static_cast<long>(mant.size());
  if (k > 0 && k <= std::max<long>(ndig, 1) + 6 && k <= digits + 6) {
    // plain form with the radix point inside or shortly after the mantissa
    if (k >= ndig) {
      out = mant + std::string(static_cast<size_t>(k - ndig), '0');
    } else {
      out = mant.substr(0, static_cast<size_t>(k)) + "." + mant.substr(static_cast<size_t>(k));
    }
  } else if (k <= 0 && k > -6) {
    out = "0." + std::string(static_cast<size_t>(-k), '0') + mant;
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(k - 1);
  }
  return neg ? "-" + out : out;
}

}  // namespace texp
