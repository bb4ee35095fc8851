#include "texp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace texp {

namespace {

std::string mpz_str(const mpz_t z) {
  char* s = mpz_get_str(nullptr, 10, z);
  std::string out(s);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(s, out.size() + 1);
  return out;
}

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

BigRational::BigRational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(q_, q_, d);
  mpq_clear(d);
  mpq_canonicalize(q_);
}

BigRational::BigRational(const std::string& text) {
  mpq_init(q_);
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den))
      throw std::invalid_argument("bad rational: " + text);
    if (mpq_set_str(q_, text.c_str(), 10) != 0)
      throw std::invalid_argument("bad rational: " + text);
    if (mpz_sgn(mpq_denref(q_)) == 0) throw std::invalid_argument("zero denominator: " + text);
    mpq_canonicalize(q_);
  } else if (is_integer_text(text)) {
    if (mpq_set_str(q_, text.c_str(), 10) != 0)
      throw std::invalid_argument("bad rational: " + text);
  } else {
    *this = from_decimal(text);
  }
}

BigRational BigRational::from_decimal(const std::string& decimal) {
  // Interpret "[-]ddd[.ddd][e[+-]k]" exactly as mantissa * 10^shift.
  std::string s = decimal;
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    exp10 = std::stol(s.substr(epos + 1));
    s.erase(epos);
  }
  std::string digits;
  bool neg = false;
  long frac = 0;
  bool seen_dot = false, seen_digit = false;
  for (size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '+' && i == 0) continue;
    if (ch == '-' && i == 0) { neg = true; continue; }
    if (ch == '.') {
      if (seen_dot) throw std::invalid_argument("bad decimal: " + decimal);
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad decimal: " + decimal);
    digits.push_back(ch);
    seen_digit = true;
    if (seen_dot) ++frac;
  }
  if (!seen_digit) throw std::invalid_argument("bad decimal: " + decimal);

  BigRational r;
  mpz_set_str(mpq_numref(r.q_), digits.c_str(), 10);
  mpz_set_ui(mpq_denref(r.q_), 1);
  long shift = exp10 - frac;
  mpz_t p;
  mpz_init(p);
  mpz_ui_pow_ui(p, 10, static_cast<unsigned long>(shift >= 0 ? shift : -shift));
  if (shift >= 0)
    mpz_mul(mpq_numref(r.q_), mpq_numref(r.q_), p);
  else
    mpz_set(mpq_denref(r.q_), p);
  mpz_clear(p);
  mpq_canonicalize(r.q_);
  if (neg) mpq_neg(r.q_, r.q_);
  return r;
}

BigRational BigRational::negated() const {
  BigRational r(*this);
  mpq_neg(r.q_, r.q_);
  return r;
}

BigRational operator+(const BigRational& a, const BigRational& b) {
  BigRational r;
  mpq_add(r.q_, a.q_, b.q_);
  return r;
}

BigRational operator-(const BigRational& a, const BigRational& b) {
  BigRational r;
  mpq_sub(r.q_, a.q_, b.q_);
  return r;
}

BigFloat BigRational::to_bigfloat(int digits) const {
  BigFloat r(digits);
  mpfr_set_q(r.raw(), q_, MPFR_RNDN);
  return r;
}

std::string BigRational::numerator() const { return mpz_str(mpq_numref(q_)); }
std::string BigRational::denominator() const { return mpz_str(mpq_denref(q_)); }

std::string BigRational::to_string() const {
  std::string den = denominator();
  return den == "1" ? numerator() : numerator() + "/" + den;
}

}  // namespace texp
