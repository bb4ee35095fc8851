#pragma once

#include <optional>
#include <string>

#include "texp/bigfloat.hpp"
#include "texp/rational.hpp"

namespace texp {

// Precision-carrying complex number. All contracts are in significant
// decimal digits; mixed-precision arithmetic yields the minimum precision.
class PrecComplex {
 public:
  PrecComplex() : re_(kMinPrecDigits), im_(kMinPrecDigits), prec_(kMinPrecDigits) {}
  PrecComplex(BigFloat re, BigFloat im);
  explicit PrecComplex(int prec) : re_(prec), im_(prec), prec_(clamp_digits(prec)) {}
  PrecComplex(const std::string& re, const std::string& im, int prec)
      : re_(re, clamp_digits(prec)), im_(im, prec), prec_(prec) {}
  PrecComplex(double re, double im, int prec)
      : re_(re, clamp_digits(prec)), im_(im, prec), prec_(prec) {}

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  int prec() const { return prec_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  std::string re_string() const { return re_.to_string(prec_); }
  std::string im_string() const { return im_.to_string(prec_); }

  friend PrecComplex operator+(const PrecComplex& a, const PrecComplex& b);
  friend PrecComplex operator-(const PrecComplex& a, const PrecComplex& b);
  friend PrecComplex operator*(const PrecComplex& a, const PrecComplex& b);
  friend PrecComplex operator/(const PrecComplex& a, const PrecComplex& b);
  friend PrecComplex operator-(const PrecComplex& a);

 private:
  BigFloat re_, im_;
  int prec_;
};

struct RationalComplex {
  BigRational re, im;
  PrecComplex to_prec(int digits) const {
    return PrecComplex(re.to_bigfloat(digits), im.to_bigfloat(digits));
  }
};

BigFloat cx_abs(const PrecComplex& w);
// Principal argument in (-pi, pi]; Arg(0) is a domain error.
BigFloat cx_arg(const PrecComplex& w);
PrecComplex cx_conj(const PrecComplex& w);

// ln|w| + i Arg(w); w == 0 is a domain error.
PrecComplex cx_log_principal(const PrecComplex& w);

// e^w, or nullopt when |Re w| exceeds the overflow guard (1e8 * ln 10).
std::optional<PrecComplex> cx_exp(const PrecComplex& w);

// Reads the decimal digits of w exactly (rationalization) and re-expands them
// at newPrec digits. Raising precision pads with zeros; lowering rounds
// half-even. Idempotent at fixed newPrec.
PrecComplex reprecision(const PrecComplex& w, int new_prec);
BigFloat reprecision(const BigFloat& x, int new_prec);

PrecComplex scale_pow10(const PrecComplex& w, long exponent);

}  // namespace texp
