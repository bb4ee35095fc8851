#pragma once

#include "texp/zcontext.hpp"

namespace texp {

// Secondary branch-cut test for sheet leaf n, evaluated at w.
// With k = Arg w + 2n*pi: the cut domain is a*ln r + b*k < 0 and the cut
// trace is a*k - b*ln r = 0; the cut itself is their intersection.
struct CutEval {
  bool in_domain = false;
  BigFloat trace_value;
  bool on_cut = false;
};

CutEval secondary_cut(const PrecComplex& w, long long n, const ZContext& ctx);

// Logarithmic-spiral branch-cut radius e^{(a/b)(theta + 2n*pi)}; requires b != 0.
BigFloat branch_cut_f(const BigFloat& theta_w, long long n, const ZContext& ctx);

}  // namespace texp
