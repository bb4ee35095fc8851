#pragma once

#include <optional>
#include <string>
#include <vector>

#include "texp/frame.hpp"

namespace texp {

struct IterationConfig {
  int working_prec = 50;        // significant decimal digits carried
  int target_accuracy = 30;     // residual exponent: converged below 10^-acc
  int max_iters = 50;
  std::optional<int> relaxation;  // unset: region rule (1B -> 2, 1E -> 3, else 1)

  void validate() const;
};

struct RootId {
  long long n = 0;
  long long m = 0;
  std::optional<int> p;
  SheetIndex sheet() const { return SheetIndex{n, m}; }
  std::string to_string() const;
};

struct RootRecord {
  ZSpec z;
  RootId id;
  PrecComplex value;
  BigFloat residual_log;                   // |w - stack(w)| of the stored value
  std::optional<BigFloat> residual_exp;    // nullopt: exponential form overflowed
  int iterations = 0;                      // count to reach detection accuracy
  StackId stack;
  RegionTag region;
  int prec = 0;
  int target_accuracy = 0;
  int relaxation = 1;
  bool converged = false;
};

class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, std::string last_iterate_re,
                  std::string last_iterate_im, int iterations)
      : std::runtime_error(what),
        last_re(std::move(last_iterate_re)),
        last_im(std::move(last_iterate_im)),
        iterations(iterations) {}
  std::string last_re, last_im;
  int iterations = 0;
};

// One Newton update with over-relaxation; the derivative uses the leaf index
// the stack actually evaluated at w.
PrecComplex newton_step(const PrecComplex& w, SheetIndex idx, const ZContext& ctx,
                        const StackId& stack, int relaxation);

RootRecord solve_root(const RootId& id, const ZContext& ctx, const IterationConfig& cfg,
                      const std::optional<PrecComplex>& chain_seed = std::nullopt);

struct SweepFailure {
  long long n = 0;
  std::string reason;
};

struct SweepResult {
  std::vector<RootRecord> records;
  std::vector<SweepFailure> failures;
};

// Sequential branch sweep: first root from the branch-head seed, each
// subsequent root seeded from the previous one after reprecision.
SweepResult solve_sweep(long long m, long long n_from, long long n_to, const ZContext& ctx,
                        const IterationConfig& cfg);

struct Residuals {
  BigFloat residual_log;
  std::optional<BigFloat> residual_exp;
};

// Back-substitution check, recomputed with guard digits so the measurement
// itself is not quantization-limited.
Residuals verify_root(const RootRecord& rec, const ZContext& ctx);

// Reprecision the root and apply one more Newton update; returns the new
// residual (log form, guarded).
BigFloat refine_once(const RootRecord& rec, const ZContext& ctx, int new_prec);

struct BasinResult {
  int width = 0, height = 0;
  double center_re = 0, center_im = 0, window = 0;
  std::vector<int> labels;                // row-major, top row first; -1 divergence
  std::vector<PrecComplex> attractors;    // sorted: descending Im, then Re
  std::vector<long> counts;               // per attractor
  long divergent = 0;
  int label_at(int row, int col) const { return labels[static_cast<size_t>(row) * width + col]; }
};

// Newton basin over a square window: each cell center is a seed; cells are
// labelled by the attractor their iteration reaches (clustered to 1e-6) or
// by divergence.
BasinResult basin_scan(double center_re, double center_im, double window, int grid_w,
                       int grid_h, const RootId& id, const ZContext& ctx,
                       const IterationConfig& cfg);

}  // namespace texp
