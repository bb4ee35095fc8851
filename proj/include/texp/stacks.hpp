#pragma once

#include <string>

#include "texp/plog.hpp"
#include "texp/region.hpp"

namespace texp {

// Cut side of a derived stack: single cut on the (N)egative or (P)ositive
// real axis, or the (D)efault unstitched pLog.
enum class CutSide { N, P, D };

struct StackId {
  RegionTag region;
  CutSide side;
  friend bool operator==(const StackId&, const StackId&) = default;
};

std::string stack_name(const StackId& id);  // e.g. "1DN", "3AP", "1ED"
StackId stack_from_name(const std::string& name);
bool stack_valid(const StackId& id);

// The sheet the stitched stack actually evaluates at w for nominal index
// idx. Newton's derivative must use the same adjusted leaf.
SheetIndex resolve_stack(const StackId& id, const PrecComplex& w, SheetIndex idx,
                         const ZContext& ctx);

PrecComplex stack_eval(const StackId& id, const PrecComplex& w, SheetIndex idx,
                       const ZContext& ctx);

enum class SeedPurpose { General, RealAxisRoot };

StackId select_stack(RegionTag region, SheetIndex idx, SeedPurpose purpose);

}  // namespace texp
