#include "texp/frame.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace texp {

namespace {

bool inverted_real(const ZContext& ctx) {
  return ctx.region == RegionTag::R1D || ctx.region == RegionTag::R1E ||
         ctx.region == RegionTag::R1F;
}

}  // namespace

BranchFrame branch_frame(const ZContext& ctx) {
  int p = ctx.prec;
  BigFloat pi = const_pi(p);
  BigFloat half_pi = pi / BigFloat(2L, p);

  BigFloat alpha = ctx.b.is_zero()
                       ? (ctx.a.sign() > 0 ? half_pi : -half_pi)
                       : atan2(ctx.a, ctx.b);
  BigFloat beta = half_pi - alpha;
  // Keep beta in (-pi, pi]; regions 1D-1F use -pi by convention.
  if (beta > pi) beta -= mul_si(pi, 2);
  if (inverted_real(ctx)) beta = -pi;

  BigFloat t = ctx.b.is_zero() ? half_pi : atan(ctx.a / ctx.b);
  BigFloat u = ctx.a.is_zero() ? (ctx.b.sign() > 0 ? half_pi : -half_pi)
                               : atan(ctx.b / ctx.a);

  BigFloat eps = pi / ctx.c;
  BigFloat delta = mul_si(eps, 3) / BigFloat(2L, p);
  return BranchFrame{alpha, beta, ctx.c, eps, delta, t, u};
}

Point2 rotate(const Point2& p, const BigFloat& angle) {
  int d = std::min(p.x.digits(), p.y.digits());
  BigFloat c(d), s(d);
  mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
  return Point2{p.x * c - p.y * s, p.y * c + p.x * s};
}

namespace {

std::optional<BigFloat> separated_log(const BigFloat& y, const BigFloat& num,
                                      const ZContext& ctx, bool branch_form) {
  int p = std::min(y.digits(), ctx.prec);
  BigFloat cy = ctx.c * y;
  BigFloat s(p), co(p);
  mpfr_sin_cos(s.raw(), co.raw(), cy.raw(), MPFR_RNDN);
  BigFloat den = branch_form ? ctx.a * co - ctx.b * s : ctx.a * s + ctx.b * co;
  if (den.is_zero()) return std::nullopt;
  BigFloat q = num / den;
  if (q.sign() <= 0) return std::nullopt;
  return log(q) / ctx.c;
}

}  // namespace

std::optional<BigFloat> branch_f(const BigFloat& y, const BigFloat& psi, const ZContext& ctx) {
  return separated_log(y, psi, ctx, true);
}

std::optional<BigFloat> leaf_f(const BigFloat& y, const BigFloat& phi, const ZContext& ctx) {
  return separated_log(y, phi, ctx, false);
}

std::pair<BigFloat, BigFloat> branch_asymptotes(long long m, const ZContext& ctx) {
  BranchFrame f = branch_frame(ctx);
  BigFloat pi = const_pi(ctx.prec);
  BigFloat upper = (mul_si(pi, 2 * m) + f.branch_asym_offset) / ctx.c;
  return {upper - pi / ctx.c, upper};
}

std::pair<BigFloat, BigFloat> leaf_asymptotes(long long n, const ZContext& ctx) {
  BranchFrame f = branch_frame(ctx);
  BigFloat pi = const_pi(ctx.prec);
  BigFloat lower = (mul_si(pi, 2 * n) - f.leaf_asym_offset) / ctx.c;
  return {lower, lower + pi / ctx.c};
}

PrecComplex seed(SheetIndex idx, const ZContext& ctx) {
  int p = ctx.prec;
  BranchFrame f = branch_frame(ctx);
  BigFloat pi = const_pi(p);
  BigFloat half_pi = pi / BigFloat(2L, p);

  BigFloat y_mid = (mul_si(pi, 2 * idx.m) + f.branch_asym_offset - half_pi) / ctx.c;
  BigFloat half_lobe = f.lobe_width / BigFloat(2L, p);
  BigFloat psi = abs(y_mid) > half_lobe ? y_mid : half_lobe;

  std::optional<BigFloat> x = branch_f(y_mid, psi, ctx);
  if (!x) x = branch_f(y_mid, -psi, ctx);
  if (!x) throw SeedFailure("seed: branch_f out of domain for m = " + std::to_string(idx.m));

  Point2 base = rotate(Point2{*x, psi}, -f.beta);
  return PrecComplex(base.x, base.y);
}

// ---------------------------------------------------------------------------
// Sub-seed construction. Real-axis roots come from cheap real presolves; the
// off-axis regions locate the two observed basins with a double-precision
// probe of the region's own iterator, then hand the points over as seeds.

namespace {

using cxd = std::complex<double>;

double real_t1_fixed_point(double a) {
  // x = e^{a x}, attracting for the regions that call this (|x a| < 1).
  double x = a > 0 ? 1.0 : 0.5;
  for (int i = 0; i < 400; ++i) x = std::exp(a * x);
  return x;
}

double real_t1_upper_root(double a, double x1) {
  // second solution of x = e^{a x} for 0 < a < 1/e, above the attracting one
  double lo = x1 + 1e-6, hi = x1 + 1.0;
  auto g = [a](double x) { return x - std::exp(a * x); };
  while (g(hi) > 0) hi *= 2;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (g(mid) >= 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

void real_two_cycle(double a, double& q1, double& q2) {
  double x = 0.05;
  for (int i = 0; i < 4000; ++i) x = std::exp(a * std::exp(a * x));
  q1 = x;
  q2 = std::exp(a * q1);
  if (q1 > q2) std::swap(q1, q2);
}

double real_t1_between(double a, double lo, double hi) {
  auto g = [a](double x) { return x - std::exp(a * x); };
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (g(mid) <= 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

cxd dplog(cxd w, long long n, long long m, cxd L) {
  const double two_pi = 6.283185307179586;
  cxd inner = (std::log(w) + cxd(0, two_pi * static_cast<double>(n))) / L;
  return (std::log(inner) + cxd(0, two_pi * static_cast<double>(m))) / L;
}

cxd dstack(const StackId& id, cxd w, const ZContext& ctx, cxd L) {
  // double-precision resolve of the {0,0} sheet, enough for probing
  double a = std::real(L), b = std::imag(L);
  double th = std::arg(w), r = std::abs(w);
  long long n = 0, m = 0;
  auto bcf = [&](double theta, long long k) {
    return std::exp(a / b * (theta + 6.283185307179586 * static_cast<double>(k)));
  };
  switch (id.region) {
    case RegionTag::R2A:
      if (th < 0 && r <= 1.0) m -= 1;
      break;
    case RegionTag::R2B:
      if (th > 0 && r <= 1.0) m += 1;
      break;
    case RegionTag::R3A: case RegionTag::R4A:
      if (th < 0 && r < bcf(th, 0)) m -= 1;
      break;
    case RegionTag::R3B: case RegionTag::R4B:
      if (th > 0 && r < bcf(th, 0)) m += 1;
      break;
    default:
      break;
  }
  return dplog(w, n, m, L);
}

std::optional<cxd> dnewton(const StackId& id, cxd w0, const ZContext& ctx, cxd L) {
  cxd w = w0;
  for (int i = 0; i < 80; ++i) {
    cxd F = w - dstack(id, w, ctx, L);
    if (!std::isfinite(std::real(F)) || !std::isfinite(std::imag(F))) return std::nullopt;
    if (std::abs(F) < 1e-11) return w;
    cxd d = 1.0 / (w * L * std::log(w));
    cxd den = 1.0 - d;
    if (std::abs(den) < 1e-14) return std::nullopt;
    w -= F / den;
    if (!std::isfinite(std::real(w)) || std::abs(w) > 1e40) return std::nullopt;
  }
  return std::nullopt;
}

std::optional<cxd> complex_t1_fp(cxd L) {
  const cxd starts[] = {{0.6, 0.4}, {0.6, -0.4}, {1.5, 1.0}, {1.5, -1.0},
                        {0.3, 0.8}, {0.3, -0.8}, {2.0, 0.0}, {0.4, 0.0}};
  for (cxd s : starts) {
    cxd w = s;
    bool ok = true;
    for (int i = 0; i < 80; ++i) {
      cxd F = w - std::log(w) / L;
      if (std::abs(F) < 1e-12) break;
      cxd den = 1.0 - 1.0 / (w * L);
      if (std::abs(den) < 1e-14 || !std::isfinite(std::abs(w))) { ok = false; break; }
      w -= F / den;
      if (!std::isfinite(std::real(w)) || std::abs(w) > 1e40) { ok = false; break; }
    }
    if (ok && std::abs(w - std::log(w) / L) < 1e-9) return w;
  }
  return std::nullopt;
}

PrecComplex from_double(cxd w, int prec) {
  return PrecComplex(std::real(w), std::imag(w), prec);
}

PrecComplex real_seed(double x, int prec) { return PrecComplex(x, 0.0, prec); }

std::vector<SubSeed> pair_region_seeds(const ZContext& ctx) {
  cxd L(ctx.a.to_double(), ctx.b.to_double());
  StackId st = select_stack(ctx.region, SheetIndex{0, 0}, SeedPurpose::General);
  std::vector<cxd> found;
  if (auto t1 = complex_t1_fp(L)) found.push_back(*t1);
  const double radii[] = {2.2, 0.45};
  for (double rad : radii) {
    for (int k = 0; k < 12; ++k) {
      double th = -3.0 + 6.0 * k / 12.0;
      auto got = dnewton(st, std::polar(rad, th), ctx, L);
      if (!got) continue;
      bool fresh = true;
      for (cxd f : found)
        if (std::abs(*got - f) < 1e-6) { fresh = false; break; }
      if (fresh) found.push_back(*got);
      if (found.size() >= 2) break;
    }
    if (found.size() >= 2) break;
  }
  // p ordered by descending Im, ties by descending Re
  std::sort(found.begin(), found.end(), [](cxd x, cxd y) {
    if (std::imag(x) != std::imag(y)) return std::imag(x) > std::imag(y);
    return std::real(x) > std::real(y);
  });
  std::vector<SubSeed> out;
  int p = 1;
  for (cxd f : found) out.push_back(SubSeed{p++, from_double(f, ctx.prec), 1});
  return out;
}

}  // namespace

std::vector<SubSeed> sub_seeds(const ZContext& ctx) {
  int prec = ctx.prec;
  double a = ctx.a.to_double();
  switch (ctx.region) {
    case RegionTag::R1A: {
      PrecComplex s = seed(SheetIndex{0, 0}, ctx);
      PrecComplex up(s.re(), abs(s.im()));
      return {SubSeed{1, up, 1}, SubSeed{2, cx_conj(up), 1}};
    }
    case RegionTag::R1B: {
      BigFloat e = exp(BigFloat(1L, prec));
      BigFloat near_e = e * BigFloat("1.1", prec);
      return {SubSeed{1, PrecComplex(near_e, BigFloat(0L, prec)), 2}};
    }
    case RegionTag::R1C: {
      double x1 = real_t1_fixed_point(a);
      double x2 = real_t1_upper_root(a, x1);
      return {SubSeed{1, real_seed(x2, prec), 1}, SubSeed{2, real_seed(x1, prec), 1}};
    }
    case RegionTag::R1D: {
      PrecComplex s = seed(SheetIndex{0, 0}, ctx);
      PrecComplex up(s.re(), abs(s.im()));
      double xr = real_t1_fixed_point(a);
      return {SubSeed{1, up, 1}, SubSeed{2, cx_conj(up), 1}, SubSeed{3, real_seed(xr, prec), 1}};
    }
    case RegionTag::R1E: {
      BigFloat inv_e = exp(BigFloat(-1L, prec));
      return {SubSeed{1, PrecComplex(inv_e * BigFloat("1.1", prec), BigFloat(0L, prec)), 3}};
    }
    case RegionTag::R1F: {
      double q1, q2;
      real_two_cycle(a, q1, q2);
      double xs = real_t1_between(a, q1 + 1e-9, q2 - 1e-9);
      return {SubSeed{1, real_seed(q2, prec), 1}, SubSeed{2, real_seed(xs, prec), 1},
              SubSeed{3, real_seed(q1, prec), 1}};
    }
    case RegionTag::R4A:
      return {};  // no multi-root sheet observed in this region
    default:
      return pair_region_seeds(ctx);
  }
}

}  // namespace texp
