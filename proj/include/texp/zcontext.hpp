#pragma once

#include <stdexcept>
#include <string>

#include "texp/complex.hpp"

namespace texp {

// |z| is either an exact rational or one of the two symbolic region
// boundaries e^(1/e) and e^(-e); only those admit exact classification
// as regions 1B / 1E.
struct Magnitude {
  enum class Kind { Rational, ExpInvE, ExpNegE };
  Kind kind = Kind::Rational;
  BigRational ratio;  // meaningful for Kind::Rational

  static Magnitude rational(BigRational r) { return {Kind::Rational, std::move(r)}; }
  static Magnitude exp_inv_e() { return {Kind::ExpInvE, BigRational(1, 1)}; }
  static Magnitude exp_neg_e() { return {Kind::ExpNegE, BigRational(1, 1)}; }
  static Magnitude parse(const std::string& text);

  bool positive() const { return kind != Kind::Rational || ratio.sign() > 0; }
  BigFloat log_value(int digits) const;  // ln r
  BigFloat value(int digits) const;      // r
  std::string to_string() const;
};

struct ZSpec {
  Magnitude r;          // |z| > 0
  BigRational theta_pi; // Arg z = theta_pi * pi, normalized into (-1, 1]
  std::string to_string() const;
};

enum class RegionTag { R1A, R1B, R1C, R1D, R1E, R1F, R2A, R2B, R3A, R3B, R4A, R4B };

const char* region_name(RegionTag tag);
RegionTag region_from_name(const std::string& name);

class InadmissibleZ : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exactly one tag per admissible z (z not 0 or 1). Arg z = pi classifies
// into the A subregions.
RegionTag classify(const ZSpec& z);

// The base z with Log z = a + bi and derived constants, at a fixed working
// precision. Immutable; cheap to rebuild at another precision.
struct ZContext {
  ZSpec z;
  int prec;
  RegionTag region;
  PrecComplex logz;  // a + bi
  BigFloat a, b, c;  // c = |Log z| > 0

  static ZContext make(const ZSpec& z, int prec);
  ZContext at_prec(int new_prec) const { return make(z, new_prec); }
  bool real_axis() const { return b.is_zero(); }
};

ZSpec normalize(Magnitude r, BigRational theta_pi);

}  // namespace texp
