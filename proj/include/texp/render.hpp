#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "texp/solver.hpp"

namespace texp {

// Display pipeline runs at double precision; the computation pipeline never
// depends on anything here.

enum class Layer { RealContours, ImagContours, BranchTrace, LeafTrace, Seeds, Roots,
                   BranchDelimiters, BasinRaster };

struct PlotSpec {
  double center_re = 0, center_im = 0;
  double width = 20, height = 20;
  int grid = 320;                    // marching-squares resolution per axis
  std::set<Layer> layers;
  int svg_pixels = 800;
};

struct FieldValue {
  double real_part = 0, imag_part = 0;
  bool overflow = false;
};

// (realF2B, imagF2B)(x, y) = (Re, Im) of z^(z^w) at w = x + iy.
FieldValue contour_fields(double x, double y, double a, double b);
// 1-cycle base forms: (Re, Im) of z^w.
FieldValue t1_contour_fields(double x, double y, double a, double b);

struct Segment {
  double x0, y0, x1, y1;
};

// Zero-level curves of f over the window by grid sign-change marching.
std::vector<Segment> extract_zero_segments(const PlotSpec& spec, double a, double b,
                                           bool real_field, bool one_cycle = false);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string render_contour_svg(const PlotSpec& spec, const ZContext& ctx,
                               const std::vector<RootRecord>& roots);
void render_contour(const PlotSpec& spec, const ZContext& ctx,
                    const std::vector<RootRecord>& roots, const std::string& path);

std::string render_basin_ppm(const BasinResult& raster);
void render_basin(const BasinResult& raster, const std::string& path);

}  // namespace texp
