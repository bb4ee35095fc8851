#include "texp/region.hpp"

namespace texp {

CutEval secondary_cut(const PrecComplex& w, long long n, const ZContext& ctx) {
  if (w.is_zero()) throw std::domain_error("secondary_cut: w = 0");
  int p = w.prec();
  BigFloat lnr = log(cx_abs(w));
  BigFloat k = cx_arg(w) + mul_si(const_pi(p), 2 * n);
  BigFloat domain = ctx.a * lnr + ctx.b * k;
  BigFloat trace = ctx.a * k - ctx.b * lnr;

  CutEval out;
  out.in_domain = domain.sign() < 0;
  out.trace_value = trace;
  // On-cut tolerance scales with the terms entering the trace.
  BigFloat scale = abs(ctx.a * k) + abs(ctx.b * lnr) + BigFloat(1L, p);
  BigFloat tol = scale * pow10(-(p - 8), p);
  out.on_cut = out.in_domain && abs(trace) < tol;
  return out;
}

BigFloat branch_cut_f(const BigFloat& theta_w, long long n, const ZContext& ctx) {
  if (ctx.b.is_zero()) throw std::domain_error("branch_cut_f: requires Arg z != 0");
  int p = theta_w.digits();
  BigFloat k = theta_w + mul_si(const_pi(p), 2 * n);
  return exp(ctx.a / ctx.b * k);
}

}  // namespace texp
