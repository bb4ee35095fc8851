#pragma once

#include <optional>

#include "texp/zcontext.hpp"

namespace texp {

// Sheet of the composite log: n indexes the inner 2*pi multiple (leaf),
// m the outer one (branch). Large indices (order 1e12) are routine.
struct SheetIndex {
  long long n = 0;
  long long m = 0;
  friend bool operator==(const SheetIndex&, const SheetIndex&) = default;
};

// pLog(w,n,m;z) = (Log[(Log w + 2n*pi*i)/Log z] + 2m*pi*i)/Log z, both Log
// principal. The 2n/2m terms carry all the multivaluedness.
PrecComplex plog(const PrecComplex& w, SheetIndex idx, const ZContext& ctx);

// d/dw pLog = 1/(w * Log z * (Log w + 2n*pi*i)).
PrecComplex plog_deriv(const PrecComplex& w, long long n, const ZContext& ctx);

// 1-cycle analogue (Log w + 2n*pi*i)/Log z; its fixed points are T1 roots
// and therefore also T2 roots.
PrecComplex t1_plog(const PrecComplex& w, long long n, const ZContext& ctx);

// Exponential-form residual w - e^{Log z * e^{w Log z}}. Overflow in either
// exponential yields nullopt so callers fall back to the log form.
std::optional<PrecComplex> t2_exp_residual(const PrecComplex& w, const ZContext& ctx);

// Shared intermediate: Log w + 2n*pi*i at the precision of w.
PrecComplex log_plus_leaf(const PrecComplex& w, long long n, int prec);

}  // namespace texp
