#include "texp/zcontext.hpp"

namespace texp {

Magnitude Magnitude::parse(const std::string& text) {
  if (text == "e^(1/e)" || text == "e^{1/e}") return exp_inv_e();
  if (text == "e^(-e)" || text == "e^{-e}") return exp_neg_e();
  return rational(BigRational(text));
}

BigFloat Magnitude::log_value(int digits) const {
  switch (kind) {
    case Kind::ExpInvE: {  // ln r = 1/e
      BigFloat r(digits);
      mpfr_set_si(r.raw(), -1, MPFR_RNDN);
      mpfr_exp(r.raw(), r.raw(), MPFR_RNDN);
      return r;
    }
    case Kind::ExpNegE: {  // ln r = -e
      BigFloat r(digits);
      mpfr_set_si(r.raw(), 1, MPFR_RNDN);
      mpfr_exp(r.raw(), r.raw(), MPFR_RNDN);
      return -r;
    }
    case Kind::Rational:
    default:
      if (ratio.sign() <= 0) throw InadmissibleZ("|z| must be positive");
      return log(ratio.to_bigfloat(digits));
  }
}

BigFloat Magnitude::value(int digits) const {
  if (kind == Kind::Rational) return ratio.to_bigfloat(digits);
  return exp(log_value(digits));
}

std::string Magnitude::to_string() const {
  switch (kind) {
    case Kind::ExpInvE: return "e^(1/e)";
    case Kind::ExpNegE: return "e^(-e)";
    default: return ratio.to_string();
  }
}

std::string ZSpec::to_string() const {
  return r.to_string() + " * e^(i*pi*" + theta_pi.to_string() + ")";
}

const char* region_name(RegionTag tag) {
  switch (tag) {
    case RegionTag::R1A: return "1A";
    case RegionTag::R1B: return "1B";
    case RegionTag::R1C: return "1C";
    case RegionTag::R1D: return "1D";
    case RegionTag::R1E: return "1E";
    case RegionTag::R1F: return "1F";
    case RegionTag::R2A: return "2A";
    case RegionTag::R2B: return "2B";
    case RegionTag::R3A: return "3A";
    case RegionTag::R3B: return "3B";
    case RegionTag::R4A: return "4A";
    case RegionTag::R4B: return "4B";
  }
  return "?";
}

RegionTag region_from_name(const std::string& name) {
  static const RegionTag all[] = {RegionTag::R1A, RegionTag::R1B, RegionTag::R1C, RegionTag::R1D,
                                  RegionTag::R1E, RegionTag::R1F, RegionTag::R2A, RegionTag::R2B,
                                  RegionTag::R3A, RegionTag::R3B, RegionTag::R4A, RegionTag::R4B};
  for (RegionTag t : all)
    if (name == region_name(t)) return t;
  throw std::invalid_argument("unknown region: " + name);
}

ZSpec normalize(Magnitude r, BigRational theta_pi) {
  // Fold theta_pi into (-1, 1].
  const BigRational two(2, 1);
  while (theta_pi.compare_si(1, 1) > 0) theta_pi = theta_pi - two;
  while (theta_pi.compare_si(-1, 1) <= 0) theta_pi = theta_pi + two;
  return ZSpec{std::move(r), std::move(theta_pi)};
}

namespace {

// Compare ln r against a target value (0, 1/e, or -e) at enough precision to
// decide strictly; symbolic magnitudes compare exactly.
int cmp_logr(const Magnitude& m, int which /*0: vs 0; 1: vs 1/e; 2: vs -e*/, int digits) {
  if (m.kind == Magnitude::Kind::ExpInvE) return which == 1 ? 0 : (which == 0 ? 1 : 1);
  if (m.kind == Magnitude::Kind::ExpNegE) return which == 2 ? 0 : -1;
  if (which == 0) {
    // rational r vs 1, exact
    return m.ratio.compare_si(1, 1);
  }
  BigFloat lr = m.log_value(digits);
  BigFloat target(digits);
  mpfr_set_si(target.raw(), which == 1 ? -1 : 1, MPFR_RNDN);
  mpfr_exp(target.raw(), target.raw(), MPFR_RNDN);
  if (which == 2) mpfr_neg(target.raw(), target.raw(), MPFR_RNDN);
  return lr.compare(target);
}

}  // namespace

RegionTag classify(const ZSpec& z) {
  if (!z.r.positive()) throw InadmissibleZ("z = 0 is inadmissible");
  bool theta_zero = z.theta_pi.is_zero();
  if (theta_zero && z.r.kind == Magnitude::Kind::Rational && z.r.ratio.is_one())
    throw InadmissibleZ("z = 1 is inadmissible (Log z = 0)");

  const int digits = 60;
  if (theta_zero) {
    // positive real axis: Table 1 thresholds e^(1/e), 1, e^(-e)
    int vs_inv_e = cmp_logr(z.r, 1, digits);
    if (vs_inv_e > 0) return RegionTag::R1A;
    if (vs_inv_e == 0) return RegionTag::R1B;
    int vs_one = cmp_logr(z.r, 0, digits);
    if (vs_one > 0) return RegionTag::R1C;
    int vs_neg_e = cmp_logr(z.r, 2, digits);
    if (vs_neg_e > 0) return RegionTag::R1D;
    if (vs_neg_e == 0) return RegionTag::R1E;
    return RegionTag::R1F;
  }

  // Arg z = pi counts as positive (A subregions).
  bool upper = z.theta_pi.sign() > 0;
  int vs_one = cmp_logr(z.r, 0, digits);
  if (vs_one == 0) return upper ? RegionTag::R2A : RegionTag::R2B;
  if (vs_one < 0) return upper ? RegionTag::R3A : RegionTag::R3B;
  return upper ? RegionTag::R4A : RegionTag::R4B;
}

ZContext ZContext::make(const ZSpec& z, int prec) {
  clamp_digits(prec);
  RegionTag region = classify(z);
  BigFloat a = z.r.log_value(prec);
  BigFloat b = z.theta_pi.to_bigfloat(prec) * const_pi(prec);
  if (z.theta_pi.is_zero()) b = BigFloat(0L, prec);
  PrecComplex logz(a, b);
  BigFloat c = hypot(a, b);
  if (c.is_zero()) throw InadmissibleZ("Log z = 0");
  return ZContext{z, prec, region, logz, a, b, c};
}

}  // namespace texp
