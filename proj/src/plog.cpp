#include "texp/plog.hpp"

namespace texp {

PrecComplex log_plus_leaf(const PrecComplex& w, long long n, int prec) {
  PrecComplex lw = cx_log_principal(w);
  if (n == 0) return lw;
  BigFloat shift = mul_si(const_pi(prec), 2 * n);
  return PrecComplex(lw.re(), lw.im() + shift);
}

PrecComplex plog(const PrecComplex& w, SheetIndex idx, const ZContext& ctx) {
  if (w.is_zero()) throw std::domain_error("plog: w = 0");
  int p = w.prec();
  PrecComplex inner = log_plus_leaf(w, idx.n, p) / ctx.logz;
  if (inner.is_zero())
    throw std::domain_error("plog: inner log singular (w = 1 on leaf 0)");
  PrecComplex outer = cx_log_principal(inner);
  if (idx.m != 0) {
    BigFloat shift = mul_si(const_pi(p), 2 * idx.m);
    outer = PrecComplex(outer.re(), outer.im() + shift);
  }
  return outer / ctx.logz;
}

PrecComplex plog_deriv(const PrecComplex& w, long long n, const ZContext& ctx) {
  if (w.is_zero()) throw std::domain_error("plog_deriv: w = 0");
  int p = w.prec();
  PrecComplex k = log_plus_leaf(w, n, p);
  if (k.is_zero()) throw std::domain_error("plog_deriv: Log w + 2n*pi*i = 0");
  PrecComplex one(BigFloat(1L, p), BigFloat(0L, p));
  return one / (w * ctx.logz * k);
}

PrecComplex t1_plog(const PrecComplex& w, long long n, const ZContext& ctx) {
  if (w.is_zero()) throw std::domain_error("t1_plog: w = 0");
  return log_plus_leaf(w, n, w.prec()) / ctx.logz;
}

std::optional<PrecComplex> t2_exp_residual(const PrecComplex& w, const ZContext& ctx) {
  auto inner = cx_exp(w * ctx.logz);
  if (!inner) return std::nullopt;
  auto outer = cx_exp(ctx.logz * *inner);
  if (!outer) return std::nullopt;
  return w - *outer;
}

}  // namespace texp
