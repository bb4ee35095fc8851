#pragma once

#include <optional>
#include <vector>

#include "texp/stacks.hpp"

namespace texp {

// Rotation data and branch geometry in normal form (lobes opening right).
// c = |Log z|, lobe width eps = pi/c, branch width delta = 3*pi/(2c).
struct BranchFrame {
  BigFloat alpha;   // inclination
  BigFloat beta;    // rotation: normal frame = rotate(base, +beta)
  BigFloat c;
  BigFloat lobe_width;
  BigFloat branch_width;
  BigFloat branch_asym_offset;  // t: branch asymptotes at c*y = t + k*pi
  BigFloat leaf_asym_offset;    // u: leaf asymptotes at c*y = -u + k*pi
};

BranchFrame branch_frame(const ZContext& ctx);

struct Point2 {
  BigFloat x, y;
};

// Counterclockwise rotation by `angle`; rotate(.,-b) then rotate(.,+b) is
// the identity.
Point2 rotate(const Point2& p, const BigFloat& angle);

// Separated-variable envelope/trace functions in the rotated frame.
// branch_f(y, psi) = (1/c) ln[psi / (a cos(cy) - b sin(cy))]
// leaf_f(y, phi)   = (1/c) ln[phi / (a sin(cy) + b cos(cy))]
// Out-of-domain (nonpositive log argument) yields nullopt.
std::optional<BigFloat> branch_f(const BigFloat& y, const BigFloat& psi, const ZContext& ctx);
std::optional<BigFloat> leaf_f(const BigFloat& y, const BigFloat& phi, const ZContext& ctx);

// Ordinate interval [lower, upper] of branch m's asymptote pair in the
// rotated frame; consecutive branches are 2*pi/c apart.
std::pair<BigFloat, BigFloat> branch_asymptotes(long long m, const ZContext& ctx);
std::pair<BigFloat, BigFloat> leaf_asymptotes(long long n, const ZContext& ctx);

class SeedFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bulb-head seed for branch idx.m (the leaf index does not move the seed;
// leaf-local refinement happens by sequential sweeping).
PrecComplex seed(SheetIndex idx, const ZContext& ctx);

struct SubSeed {
  int p = 1;
  PrecComplex start;
  int relaxation = 1;
};

// Seeds for the multi-root sheet {0,0} of the region, p-indexed. Empty for
// regions without multi-root sheets (4A).
std::vector<SubSeed> sub_seeds(const ZContext& ctx);

}  // namespace texp
