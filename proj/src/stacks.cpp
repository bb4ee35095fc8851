#include "texp/stacks.hpp"

namespace texp {

std::string stack_name(const StackId& id) {
  std::string s = region_name(id.region);
  switch (id.side) {
    case CutSide::N: s += "N"; break;
    case CutSide::P: s += "P"; break;
    case CutSide::D: s += "D"; break;
  }
  return s;
}

StackId stack_from_name(const std::string& name) {
  if (name.size() < 3) throw std::invalid_argument("bad stack name: " + name);
  RegionTag region = region_from_name(name.substr(0, 2));
  char side = name[2];
  CutSide cs = side == 'N' ? CutSide::N : side == 'P' ? CutSide::P : CutSide::D;
  if (side != 'N' && side != 'P' && side != 'D')
    throw std::invalid_argument("bad stack name: " + name);
  return StackId{region, cs};
}

bool stack_valid(const StackId& id) {
  switch (id.region) {
    case RegionTag::R1A: case RegionTag::R1B: case RegionTag::R1C:
    case RegionTag::R1D: case RegionTag::R1E: case RegionTag::R1F:
      return id.side == CutSide::N || id.side == CutSide::D;
    case RegionTag::R2A: case RegionTag::R2B: case RegionTag::R4A:
      return id.side == CutSide::N;
    case RegionTag::R3A: case RegionTag::R3B: case RegionTag::R4B:
      return id.side == CutSide::N || id.side == CutSide::P;
  }
  return false;
}

namespace {

bool region1(RegionTag r) {
  return r == RegionTag::R1A || r == RegionTag::R1B || r == RegionTag::R1C ||
         r == RegionTag::R1D || r == RegionTag::R1E || r == RegionTag::R1F;
}

bool inverted_region1(RegionTag r) {
  return r == RegionTag::R1D || r == RegionTag::R1E || r == RegionTag::R1F;
}

// Listing-1 logic: Type I stitching for the inverted real regions.
SheetIndex resolve_1DN(const BigFloat& arg_w, SheetIndex idx) {
  if (idx.n == 0) {
    if (arg_w.sign() >= 0) return idx;
    return {idx.n, idx.m - 1};
  }
  if (idx.n < 0) return {idx.n, idx.m - 1};
  return idx;
}

// Listing-2 logic: half-disc stitch for the unit circle, upper-z case.
SheetIndex resolve_2AN(const BigFloat& arg_w, const BigFloat& abs_w, SheetIndex idx) {
  if (idx.n == 0) {
    if (arg_w.sign() >= 0) return idx;
    if (abs_w.compare_si(1) > 0) return idx;
    return {idx.n, idx.m - 1};
  }
  if (idx.n > 0) return idx;
  if (abs_w.compare_si(1) >= 0) return idx;
  return {idx.n, idx.m - 1};
}

// Mirror of 2AN across the real axis: the half-disc condition moves to the
// upper half-plane and the circle cut to the positive leaves.
SheetIndex resolve_2BN(const BigFloat& arg_w, const BigFloat& abs_w, SheetIndex idx) {
  if (idx.n == 0) {
    if (arg_w.sign() <= 0) return idx;
    if (abs_w.compare_si(1) > 0) return idx;
    return {idx.n, idx.m + 1};
  }
  if (idx.n < 0) return idx;
  if (abs_w.compare_si(1) >= 0) return idx;
  return {idx.n, idx.m + 1};
}

// Spiral-cut stitch with the cut kept on the negative real axis; serves both
// regions with Arg z > 0 (3A, 4A) where the spirals slice leaves n <= 0.
SheetIndex resolve_spiral_N_up(const BigFloat& arg_w, const BigFloat& abs_w, SheetIndex idx,
                               const ZContext& ctx) {
  if (idx.n == 0) {
    if (arg_w.sign() >= 0) return idx;
    if (abs_w >= branch_cut_f(arg_w, 0, ctx)) return idx;
    return {idx.n, idx.m - 1};
  }
  if (idx.n > 0) return idx;
  if (abs_w >= branch_cut_f(arg_w, idx.n, ctx)) return idx;
  return {idx.n, idx.m - 1};
}

// Mirror for Arg z < 0 (3B, 4B): spirals slice leaves n >= 0.
SheetIndex resolve_spiral_N_down(const BigFloat& arg_w, const BigFloat& abs_w, SheetIndex idx,
                                 const ZContext& ctx) {
  if (idx.n == 0) {
    if (arg_w.sign() <= 0) return idx;
    if (abs_w >= branch_cut_f(arg_w, 0, ctx)) return idx;
    return {idx.n, idx.m + 1};
  }
  if (idx.n < 0) return idx;
  if (abs_w >= branch_cut_f(arg_w, idx.n, ctx)) return idx;
  return {idx.n, idx.m + 1};
}

// Listing-3 logic: cut relocated to the positive real axis (3A).
SheetIndex resolve_3AP(const BigFloat& arg_w, const BigFloat& abs_w, SheetIndex idx,
                       const ZContext& ctx) {
  if (idx.n >= 0) {
    if (arg_w.sign() >= 0) return idx;
    return {idx.n + 1, idx.m};
  }
  if (arg_w.sign() < 0) {
    if (abs_w >= branch_cut_f(arg_w, idx.n + 1, ctx)) return {idx.n + 1, idx.m};
    return {idx.n + 1, idx.m - 1};
  }
  if (abs_w >= branch_cut_f(arg_w, idx.n, ctx)) return idx;
  return {idx.n, idx.m - 1};
}

// Mirror of Listing 3 for Arg z < 0 (3B, 4B).
SheetIndex resolve_3BP(const BigFloat& arg_w, const BigFloat& abs_w, SheetIndex idx,
                       const ZContext& ctx) {
  if (idx.n <= 0) {
    if (arg_w.sign() <= 0) return idx;
    return {idx.n - 1, idx.m};
  }
  if (arg_w.sign() > 0) {
    if (abs_w >= branch_cut_f(arg_w, idx.n - 1, ctx)) return {idx.n - 1, idx.m};
    return {idx.n - 1, idx.m + 1};
  }
  if (abs_w >= branch_cut_f(arg_w, idx.n, ctx)) return idx;
  return {idx.n, idx.m + 1};
}

}  // namespace

SheetIndex resolve_stack(const StackId& id, const PrecComplex& w, SheetIndex idx,
                         const ZContext& ctx) {
  if (!stack_valid(id) || (id.side != CutSide::D && id.region != ctx.region))
    throw std::invalid_argument("stack " + stack_name(id) + " not valid for region " +
                                region_name(ctx.region));
  if (id.side == CutSide::D) return idx;
  if (region1(id.region)) {
    if (!inverted_region1(id.region)) return idx;  // 1AN/1BN/1CN are plain pLog
    return resolve_1DN(cx_arg(w), idx);
  }
  BigFloat arg_w = cx_arg(w);
  BigFloat abs_w = cx_abs(w);
  switch (id.region) {
    case RegionTag::R2A: return resolve_2AN(arg_w, abs_w, idx);
    case RegionTag::R2B: return resolve_2BN(arg_w, abs_w, idx);
    case RegionTag::R3A:
      return id.side == CutSide::P ? resolve_3AP(arg_w, abs_w, idx, ctx)
                                   : resolve_spiral_N_up(arg_w, abs_w, idx, ctx);
    case RegionTag::R4A: return resolve_spiral_N_up(arg_w, abs_w, idx, ctx);
    case RegionTag::R3B:
    case RegionTag::R4B:
      return id.side == CutSide::P ? resolve_3BP(arg_w, abs_w, idx, ctx)
                                   : resolve_spiral_N_down(arg_w, abs_w, idx, ctx);
    default: return idx;
  }
}

PrecComplex stack_eval(const StackId& id, const PrecComplex& w, SheetIndex idx,
                       const ZContext& ctx) {
  return plog(w, resolve_stack(id, w, idx, ctx), ctx);
}

StackId select_stack(RegionTag region, SheetIndex idx, SeedPurpose purpose) {
  switch (region) {
    case RegionTag::R1A: case RegionTag::R1B: case RegionTag::R1C:
      return {region, CutSide::N};
    case RegionTag::R1D: case RegionTag::R1E: case RegionTag::R1F:
      return {region, purpose == SeedPurpose::RealAxisRoot ? CutSide::D : CutSide::N};
    case RegionTag::R2A: case RegionTag::R2B: case RegionTag::R4A:
      return {region, CutSide::N};
    case RegionTag::R3A:
      return {region, idx.n >= 0 ? CutSide::N : CutSide::P};
    case RegionTag::R3B: case RegionTag::R4B:
      return {region, idx.n <= 0 ? CutSide::N : CutSide::P};
  }
  return {region, CutSide::N};
}

}  // namespace texp
