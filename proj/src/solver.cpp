#include "texp/solver.hpp"

#include <algorithm>

namespace texp {

void IterationConfig::validate() const {
  clamp_digits(working_prec);
  if (target_accuracy < 5) throw std::invalid_argument("target accuracy must be >= 5");
  if (working_prec <= target_accuracy)
    throw std::invalid_argument("working precision must exceed target accuracy");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be positive");
  if (relaxation && *relaxation < 1) throw std::invalid_argument("relaxation must be >= 1");
}

std::string RootId::to_string() const {
  std::string s = "{" + std::to_string(n) + "," + std::to_string(m);
  if (p) s += "," + std::to_string(*p);
  return s + "}";
}

namespace {

bool inverted_real_region(RegionTag r) {
  return r == RegionTag::R1D || r == RegionTag::R1E || r == RegionTag::R1F;
}

int region_relaxation(RegionTag r) {
  if (r == RegionTag::R1B) return 2;
  if (r == RegionTag::R1E) return 3;
  return 1;
}

struct IterOutcome {
  PrecComplex value;
  int iterations = 0;       // updates to reach the detection threshold
  BigFloat residual_log;    // final residual, below 10^-acc
};

// Newton iteration of w - stack(w). Detection fires two digits short of the
// target (the paper counts iterations against that threshold); updates then
// continue until the residual itself clears 10^-acc.
IterOutcome iterate_to_root(const PrecComplex& seed_value, SheetIndex idx, const StackId& stack,
                            const ZContext& ctx, const IterationConfig& cfg, int relaxation) {
  const int p = cfg.working_prec;
  const BigFloat tau_detect = pow10(-(cfg.target_accuracy - 2), p);
  const BigFloat tau_final = pow10(-cfg.target_accuracy, p);
  const BigFloat bail = pow10(50, p);
  const PrecComplex one(BigFloat(1L, p), BigFloat(0L, p));
  const int extra_budget = 24;

  PrecComplex w = reprecision(seed_value, p);
  int detect = -1;
  int updates = 0;
  while (true) {
    SheetIndex eff = resolve_stack(stack, w, idx, ctx);
    PrecComplex k = log_plus_leaf(w, eff.n, p);
    PrecComplex inner = k / ctx.logz;
    if (inner.is_zero()) throw DivergenceError("inner log singular", w.re_string(), w.im_string(), updates);
    PrecComplex pl = cx_log_principal(inner);
    if (eff.m != 0) {
      BigFloat shift = mul_si(const_pi(p), 2 * eff.m);
      pl = PrecComplex(pl.re(), pl.im() + shift);
    }
    pl = pl / ctx.logz;

    PrecComplex f = w - pl;
    BigFloat r = cx_abs(f);
    if (detect < 0 && r < tau_detect) detect = updates;
    if (detect >= 0 && r < tau_final) return IterOutcome{w, detect, r};

    int budget = cfg.max_iters + (detect >= 0 ? extra_budget : 0);
    if (updates >= budget)
      throw DivergenceError("no convergence in " + std::to_string(updates) + " iterations",
                            w.re_string(), w.im_string(), updates);

    PrecComplex deriv = one / (w * ctx.logz * k);
    PrecComplex denom = one - deriv;
    if (denom.is_zero())
      throw DivergenceError("vanishing Newton denominator (multiple root)", w.re_string(),
                            w.im_string(), updates);
    PrecComplex step = f / denom;
    if (relaxation != 1) step = PrecComplex(mul_si(step.re(), relaxation), mul_si(step.im(), relaxation));
    w = w - step;
    ++updates;
    if (!w.is_finite() || w.is_zero() || cx_abs(w) > bail)
      throw DivergenceError("iterate escaped", w.re_string(), w.im_string(), updates);
  }
}

PrecComplex oriented_seed(SheetIndex idx, const ZContext& ctx) {
  PrecComplex s = seed(idx, ctx);
  if (ctx.real_axis() && idx.n != 0) {
    // conjugate-symmetric dynamics: ascending sweeps start on the upper
    // bulb half, descending on the lower
    bool want_upper = idx.n > 0;
    if (want_upper && s.im().sign() < 0) return cx_conj(s);
    if (!want_upper && s.im().sign() > 0) return cx_conj(s);
  }
  return s;
}

}  // namespace

PrecComplex newton_step(const PrecComplex& w, SheetIndex idx, const ZContext& ctx,
                        const StackId& stack, int relaxation) {
  int p = w.prec();
  SheetIndex eff = resolve_stack(stack, w, idx, ctx);
  PrecComplex f = w - plog(w, eff, ctx);
  PrecComplex one(BigFloat(1L, p), BigFloat(0L, p));
  PrecComplex denom = one - plog_deriv(w, eff.n, ctx);
  if (denom.is_zero())
    throw DivergenceError("vanishing Newton denominator (multiple root)", w.re_string(),
                          w.im_string(), 0);
  PrecComplex step = f / denom;
  if (relaxation != 1) step = PrecComplex(mul_si(step.re(), relaxation), mul_si(step.im(), relaxation));
  return w - step;
}

RootRecord solve_root(const RootId& id, const ZContext& ctx, const IterationConfig& cfg,
                      const std::optional<PrecComplex>& chain_seed) {
  cfg.validate();
  ZContext c = ctx.prec == cfg.working_prec ? ctx : ctx.at_prec(cfg.working_prec);

  StackId stack = select_stack(c.region, id.sheet(), SeedPurpose::General);
  PrecComplex start(cfg.working_prec);
  int relax = cfg.relaxation.value_or(1);

  if (id.p) {
    auto seeds = sub_seeds(c);
    auto it = std::find_if(seeds.begin(), seeds.end(),
                           [&](const SubSeed& s) { return s.p == *id.p; });
    if (it == seeds.end())
      throw std::invalid_argument("no sub-root " + id.to_string() + " in region " +
                                  region_name(c.region));
    start = chain_seed.value_or(it->start);
    if (!cfg.relaxation) relax = it->relaxation;
    // multi-root sheets of the inverted real regions live on the default
    // stack; the stitched stack cuts through them
    if (inverted_real_region(c.region)) stack = StackId{c.region, CutSide::D};
  } else {
    start = chain_seed ? *chain_seed : oriented_seed(id.sheet(), c);
  }

  IterOutcome out = iterate_to_root(start, id.sheet(), stack, c, cfg, relax);

  RootRecord rec;
  rec.z = c.z;
  rec.id = id;
  rec.value = out.value;
  rec.residual_log = out.residual_log;
  rec.iterations = out.iterations;
  rec.stack = stack;
  rec.region = c.region;
  rec.prec = cfg.working_prec;
  rec.target_accuracy = cfg.target_accuracy;
  rec.relaxation = relax;
  rec.converged = true;
  auto er = t2_exp_residual(out.value, c);
  if (er) rec.residual_exp = cx_abs(*er);
  return rec;
}

SweepResult solve_sweep(long long m, long long n_from, long long n_to, const ZContext& ctx,
                        const IterationConfig& cfg) {
  cfg.validate();
  ZContext c = ctx.prec == cfg.working_prec ? ctx : ctx.at_prec(cfg.working_prec);
  SweepResult out;
  long long step = n_to >= n_from ? 1 : -1;
  std::optional<PrecComplex> chain;
  for (long long n = n_from;; n += step) {
    RootId id{n, m, std::nullopt};
    if (n == 0 && m == 0) id.p = 1;  // the multi-root sheet: report its first root
    try {
      RootRecord rec = solve_root(id, c, cfg, chain);
      chain = reprecision(rec.value, cfg.working_prec);
      out.records.push_back(std::move(rec));
    } catch (const DivergenceError& e) {
      out.failures.push_back(SweepFailure{n, e.what()});
    } catch (const SeedFailure& e) {
      out.failures.push_back(SweepFailure{n, e.what()});
    }
    if (n == n_to) break;
  }
  return out;
}

Residuals verify_root(const RootRecord& rec, const ZContext& ctx) {
  int guard = std::min(rec.prec + 15, kMaxPrecDigits);
  ZContext c = ctx.at_prec(guard);
  PrecComplex w = reprecision(rec.value, guard);
  Residuals out{cx_abs(w - stack_eval(rec.stack, w, rec.id.sheet(), c)), std::nullopt};
  auto er = t2_exp_residual(w, c);
  if (er) out.residual_exp = cx_abs(*er);
  return out;
}

BigFloat refine_once(const RootRecord& rec, const ZContext& ctx, int new_prec) {
  ZContext c = ctx.at_prec(new_prec);
  PrecComplex w = reprecision(rec.value, new_prec);
  PrecComplex next = newton_step(w, rec.id.sheet(), c, rec.stack, rec.relaxation);
  return cx_abs(next - stack_eval(rec.stack, next, rec.id.sheet(), c));
}

BasinResult basin_scan(double center_re, double center_im, double window, int grid_w,
                       int grid_h, const RootId& id, const ZContext& ctx,
                       const IterationConfig& cfg) {
  cfg.validate();
  if (grid_w < 1 || grid_h < 1 || grid_w > 2048 || grid_h > 2048)
    throw std::invalid_argument("basin grid outside 1..2048");
  ZContext c = ctx.prec == cfg.working_prec ? ctx : ctx.at_prec(cfg.working_prec);

  StackId stack = select_stack(c.region, id.sheet(), SeedPurpose::General);
  if (inverted_real_region(c.region) && id.n == 0 && id.m == 0)
    stack = StackId{c.region, CutSide::D};
  int relax = cfg.relaxation.value_or(
      id.n == 0 && id.m == 0 ? region_relaxation(c.region) : 1);

  BasinResult res;
  res.width = grid_w;
  res.height = grid_h;
  res.center_re = center_re;
  res.center_im = center_im;
  res.window = window;
  res.labels.assign(static_cast<size_t>(grid_w) * grid_h, -1);

  const BigFloat cluster_tol("1e-6", cfg.working_prec);
  std::vector<PrecComplex> attractors;
  std::vector<long> counts;

  for (int row = 0; row < grid_h; ++row) {
    double y = center_im + window / 2 - (row + 0.5) * window / grid_h;
    for (int col = 0; col < grid_w; ++col) {
      double x = center_re - window / 2 + (col + 0.5) * window / grid_w;
      int label = -1;
      try {
        IterOutcome out = iterate_to_root(PrecComplex(x, y, cfg.working_prec), id.sheet(),
                                          stack, c, cfg, relax);
        for (size_t t = 0; t < attractors.size(); ++t) {
          if (cx_abs(out.value - attractors[t]) < cluster_tol) {
            label = static_cast<int>(t);
            break;
          }
        }
        if (label < 0) {
          attractors.push_back(out.value);
          counts.push_back(0);
          label = static_cast<int>(attractors.size()) - 1;
        }
        ++counts[static_cast<size_t>(label)];
      } catch (const std::exception&) {
        label = -1;
      }
      if (label < 0) ++res.divergent;
      res.labels[static_cast<size_t>(row) * grid_w + col] = label;
    }
  }

  // canonical attractor order: descending Im, ties by descending Re
  std::vector<int> order(attractors.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    int ci = attractors[x].im().compare(attractors[y].im());
    if (ci != 0) return ci > 0;
    return attractors[x].re().compare(attractors[y].re()) > 0;
  });
  std::vector<int> rank(order.size());
  for (size_t i = 0; i < order.size(); ++i) rank[static_cast<size_t>(order[i])] = static_cast<int>(i);
  for (int& l : res.labels)
    if (l >= 0) l = rank[static_cast<size_t>(l)];
  res.attractors.reserve(order.size());
  res.counts.reserve(order.size());
  for (int idx_old : order) {
    res.attractors.push_back(attractors[static_cast<size_t>(idx_old)]);
    res.counts.push_back(counts[static_cast<size_t>(idx_old)]);
  }
  return res;
}

}  // namespace texp
