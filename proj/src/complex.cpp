#include "texp/complex.hpp"

#include <algorithm>

namespace texp {

PrecComplex::PrecComplex(BigFloat re, BigFloat im)
    : re_(std::move(re)), im_(std::move(im)), prec_(std::min(re_.digits(), im_.digits())) {}

PrecComplex operator+(const PrecComplex& a, const PrecComplex& b) {
  return PrecComplex(a.re_ + b.re_, a.im_ + b.im_);
}
PrecComplex operator-(const PrecComplex& a, const PrecComplex& b) {
  return PrecComplex(a.re_ - b.re_, a.im_ - b.im_);
}
PrecComplex operator*(const PrecComplex& a, const PrecComplex& b) {
  return PrecComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}
PrecComplex operator/(const PrecComplex& a, const PrecComplex& b) {
  BigFloat d = b.re_ * b.re_ + b.im_ * b.im_;
  return PrecComplex((a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d);
}
PrecComplex operator-(const PrecComplex& a) { return PrecComplex(-a.re_, -a.im_); }

BigFloat cx_abs(const PrecComplex& w) { return hypot(w.re(), w.im()); }

BigFloat cx_arg(const PrecComplex& w) {
  if (w.is_zero()) throw std::domain_error("Arg(0) is undefined");
  if (w.im().is_zero()) {
    // Pin the sign of zero so that Arg(-x) = +pi exactly.
    BigFloat r(w.prec());
    if (w.re().sign() < 0) mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
  }
  return atan2(w.im(), w.re());
}

PrecComplex cx_conj(const PrecComplex& w) { return PrecComplex(w.re(), -w.im()); }

PrecComplex cx_log_principal(const PrecComplex& w) {
  if (w.is_zero()) throw std::domain_error("Log(0) is undefined");
  return PrecComplex(log(cx_abs(w)), cx_arg(w));
}

namespace {

// |Re w| beyond this produces an overflow marker instead of huge exponentials.
bool exp_overflows(const BigFloat& re_part) {
  BigFloat guard(20);
  mpfr_set_si(guard.raw(), 10, MPFR_RNDN);
  mpfr_log(guard.raw(), guard.raw(), MPFR_RNDN);
  mpfr_mul_si(guard.raw(), guard.raw(), 100000000L, MPFR_RNDN);
  return abs(re_part) > guard;
}

}  // namespace

std::optional<PrecComplex> cx_exp(const PrecComplex& w) {
  if (exp_overflows(w.re())) return std::nullopt;
  int p = w.prec();
  BigFloat mag = exp(w.re());
  BigFloat c(p), s(p);
  mpfr_sin_cos(s.raw(), c.raw(), w.im().raw(), MPFR_RNDN);
  return PrecComplex(mag * c, mag * s);
}

BigFloat reprecision(const BigFloat& x, int new_prec) {
  clamp_digits(new_prec);
  if (!x.is_finite()) {
    BigFloat r(new_prec);
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    return r;
  }
  return BigFloat(x.to_string(x.digits()), new_prec);
}

PrecComplex reprecision(const PrecComplex& w, int new_prec) {
  return PrecComplex(reprecision(w.re(), new_prec), reprecision(w.im(), new_prec));
}

PrecComplex scale_pow10(const PrecComplex& w, long exponent) {
  BigFloat f = pow10(exponent, w.prec());
  return PrecComplex(w.re() * f, w.im() * f);
}

}  // namespace texp
