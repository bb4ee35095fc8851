#include "texp/render.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace texp {

FieldValue t1_contour_fields(double x, double y, double a, double b) {
  double e = a * x - b * y;
  if (e > 700.0) return {0, 0, true};
  double mag = std::exp(e);
  double ph = a * y + b * x;
  return {mag * std::cos(ph), mag * std::sin(ph), false};
}

FieldValue contour_fields(double x, double y, double a, double b) {
  double e = a * x - b * y;
  if (e > 700.0) return {0, 0, true};
  double p = std::exp(e);
  double ph = a * y + b * x;
  double c = std::cos(ph), s = std::sin(ph);
  double outer_mag = p * (a * c - b * s);
  if (outer_mag > 700.0) return {0, 0, true};
  double mag = std::exp(outer_mag);
  if (!std::isfinite(mag)) return {0, 0, true};
  double outer_ph = p * (a * s + b * c);
  return {mag * std::cos(outer_ph), mag * std::sin(outer_ph), false};
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct Mapper {
  const PlotSpec& s;
  double px(double x) const {
    return (x - (s.center_re - s.width / 2)) / s.width * s.svg_pixels;
  }
  double py(double y) const {
    return (1.0 - (y - (s.center_im - s.height / 2)) / s.height) * s.svg_pixels;
  }
};

}  // namespace

std::vector<Segment> extract_zero_segments(const PlotSpec& spec, double a, double b,
                                           bool real_field, bool one_cycle) {
  int n = std::min(spec.grid, 2048);
  double x0 = spec.center_re - spec.width / 2, y0 = spec.center_im - spec.height / 2;
  double dx = spec.width / n, dy = spec.height / n;

  // f = field - coordinate; nodes row-major
  std::vector<double> f(static_cast<size_t>(n + 1) * (n + 1));
  std::vector<char> bad(f.size(), 0);
  for (int j = 0; j <= n; ++j) {
    double y = y0 + j * dy;
    for (int i = 0; i <= n; ++i) {
      double x = x0 + i * dx;
      FieldValue v = one_cycle ? t1_contour_fields(x, y, a, b) : contour_fields(x, y, a, b);
      size_t at = static_cast<size_t>(j) * (n + 1) + i;
      if (v.overflow || !std::isfinite(v.real_part) || !std::isfinite(v.imag_part)) {
        bad[at] = 1;
        continue;
      }
      f[at] = real_field ? v.real_part - x : v.imag_part - y;
    }
  }

  auto lerp = [](double va, double vb) { return va / (va - vb); };
  std::vector<Segment> out;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      size_t i00 = static_cast<size_t>(j) * (n + 1) + i;
      size_t i10 = i00 + 1, i01 = i00 + (n + 1), i11 = i01 + 1;
      if (bad[i00] || bad[i10] || bad[i01] || bad[i11]) continue;
      double v00 = f[i00], v10 = f[i10], v01 = f[i01], v11 = f[i11];
      double xl = x0 + i * dx, yl = y0 + j * dy;

      // collect edge crossings of the cell
      double cx[4], cy[4];
      int nc = 0;
      if ((v00 < 0) != (v10 < 0)) { cx[nc] = xl + dx * lerp(v00, v10); cy[nc++] = yl; }
      if ((v10 < 0) != (v11 < 0)) { cx[nc] = xl + dx; cy[nc++] = yl + dy * lerp(v10, v11); }
      if ((v01 < 0) != (v11 < 0)) { cx[nc] = xl + dx * lerp(v01, v11); cy[nc++] = yl + dy; }
      if ((v00 < 0) != (v01 < 0)) { cx[nc] = xl; cy[nc++] = yl + dy * lerp(v00, v01); }
      if (nc == 2) {
        out.push_back(Segment{cx[0], cy[0], cx[1], cy[1]});
      } else if (nc == 4) {
        // ambiguous saddle: split by pairing consecutive crossings
        out.push_back(Segment{cx[0], cy[0], cx[1], cy[1]});
        out.push_back(Segment{cx[2], cy[2], cx[3], cy[3]});
      }
    }
  }
  return out;
}

namespace {

void append_segments(std::ostringstream& svg, const std::vector<Segment>& segs,
                     const Mapper& map, const char* color) {
  svg << "<path fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\" d=\"";
  for (const Segment& s : segs)
    svg << "M" << fmt(map.px(s.x0)) << " " << fmt(map.py(s.y0)) << "L" << fmt(map.px(s.x1))
        << " " << fmt(map.py(s.y1));
  svg << "\"/>\n";
}

void append_polyline(std::ostringstream& svg, const std::vector<std::pair<double, double>>& pts,
                     const Mapper& map, const char* color) {
  if (pts.size() < 2) return;
  svg << "<path fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" d=\"";
  bool pen_up = true;
  for (const auto& [x, y] : pts) {
    if (std::isnan(x)) { pen_up = true; continue; }
    svg << (pen_up ? "M" : "L") << fmt(map.px(x)) << " " << fmt(map.py(y));
    pen_up = false;
  }
  svg << "\"/>\n";
}

bool in_window(const PlotSpec& s, double x, double y) {
  return x >= s.center_re - s.width / 2 && x <= s.center_re + s.width / 2 &&
         y >= s.center_im - s.height / 2 && y <= s.center_im + s.height / 2;
}

}  // namespace

std::string render_contour_svg(const PlotSpec& spec, const ZContext& ctx,
                               const std::vector<RootRecord>& roots) {
  if (spec.width <= 0 || spec.height <= 0) throw std::invalid_argument("degenerate window");
  if (spec.grid < 2 || spec.grid > 2048) throw std::invalid_argument("grid outside 2..2048");
  double a = ctx.a.to_double(), b = ctx.b.to_double();
  BranchFrame fr = branch_frame(ctx);
  double beta = fr.beta.to_double(), c = ctx.c.to_double();
  double t_off = fr.branch_asym_offset.to_double();
  Mapper map{spec};

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.svg_pixels
      << "\" height=\"" << spec.svg_pixels << "\" viewBox=\"0 0 " << spec.svg_pixels << " "
      << spec.svg_pixels << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes
  if (in_window(spec, 0, spec.center_im))
    svg << "<line x1=\"" << fmt(map.px(0)) << "\" y1=\"0\" x2=\"" << fmt(map.px(0)) << "\" y2=\""
        << spec.svg_pixels << "\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n";
  if (in_window(spec, spec.center_re, 0))
    svg << "<line x1=\"0\" y1=\"" << fmt(map.py(0)) << "\" x2=\"" << spec.svg_pixels
        << "\" y2=\"" << fmt(map.py(0)) << "\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n";

  auto rot_back = [&](double xr, double yr) {
    return std::pair<double, double>{xr * std::cos(beta) + yr * std::sin(beta),
                                     yr * std::cos(beta) - xr * std::sin(beta)};
  };

  // branch index range whose rotated ordinate band intersects the window
  double win_rad = std::hypot(spec.width, spec.height) / 2 +
                   std::hypot(spec.center_re, spec.center_im);
  long m_span = static_cast<long>(win_rad * c / (2 * M_PI)) + 1;

  if (spec.layers.count(Layer::BranchDelimiters)) {
    for (long m = -m_span; m <= m_span; ++m) {
      for (int side = 0; side < 2; ++side) {
        double yd = (2 * M_PI * m + t_off - side * M_PI) / c;
        std::vector<std::pair<double, double>> pts;
        for (int i = 0; i <= 64; ++i) {
          double xr = -win_rad + 2 * win_rad * i / 64;
          pts.push_back(rot_back(xr, yd));
        }
        append_polyline(svg, pts, map, side == 0 ? "#00aaaa" : "#800080");
      }
    }
  }

  if (spec.layers.count(Layer::RealContours)) {
    append_segments(svg, extract_zero_segments(spec, a, b, true), map, "#cc0000");
  }
  if (spec.layers.count(Layer::ImagContours)) {
    append_segments(svg, extract_zero_segments(spec, a, b, false), map, "#0033cc");
  }

  if (spec.layers.count(Layer::BranchTrace)) {
    for (long m = -m_span; m <= m_span; ++m) {
      double y_up = (2 * M_PI * m + t_off) / c;
      double y_lo = y_up - M_PI / c;
      double y_mid = (2 * M_PI * m + t_off - M_PI / 2) / c;
      double psi = std::abs(y_mid) > M_PI / (2 * c) ? y_mid : M_PI / (2 * c);
      std::vector<std::pair<double, double>> pts;
      for (int i = 1; i < 160; ++i) {
        double y = y_lo + (y_up - y_lo) * i / 160;
        double den = a * std::cos(c * y) - b * std::sin(c * y);
        double q = std::abs(psi) / den;
        if (q <= 0 || !std::isfinite(q)) { pts.emplace_back(NAN, NAN); continue; }
        auto [bx, by] = rot_back(std::log(q) / c, y);
        if (in_window(spec, bx, by)) pts.emplace_back(bx, by);
        else pts.emplace_back(NAN, NAN);
      }
      append_polyline(svg, pts, map, "#8b5a2b");
    }
  }

  if (spec.layers.count(Layer::LeafTrace)) {
    double u_off = fr.leaf_asym_offset.to_double();
    long n_span = m_span;
    for (long n = -n_span; n <= n_span; ++n) {
      if (n == 0) continue;  // phi = 2*pi*n vanishes
      double phi = 2 * M_PI * n;
      double y_lo = (2 * M_PI * n - u_off) / c, y_up = y_lo + M_PI / c;
      std::vector<std::pair<double, double>> pts;
      for (int i = 1; i < 160; ++i) {
        double y = y_lo + (y_up - y_lo) * i / 160;
        double den = a * std::sin(c * y) + b * std::cos(c * y);
        double q = phi / den;
        if (q <= 0 || !std::isfinite(q)) { pts.emplace_back(NAN, NAN); continue; }
        auto [bx, by] = rot_back(std::log(q) / c, y);
        if (in_window(spec, bx, by)) pts.emplace_back(bx, by);
        else pts.emplace_back(NAN, NAN);
      }
      append_polyline(svg, pts, map, "#000000");
    }
  }

  if (spec.layers.count(Layer::Seeds)) {
    for (long m = -m_span; m <= m_span; ++m) {
      try {
        PrecComplex s = seed(SheetIndex{0, m}, ctx);
        double sx = s.re().to_double(), sy = s.im().to_double();
        if (in_window(spec, sx, sy))
          svg << "<circle cx=\"" << fmt(map.px(sx)) << "\" cy=\"" << fmt(map.py(sy))
              << "\" r=\"3\" fill=\"#00aa00\"/>\n";
      } catch (const SeedFailure&) {
      }
    }
  }

  if (spec.layers.count(Layer::Roots)) {
    for (const RootRecord& r : roots) {
      double x = r.value.re().to_double(), y = r.value.im().to_double();
      if (!in_window(spec, x, y)) continue;
      const char* color = r.id.n < 0 ? "#ffcc00" : "#000000";
      svg << "<circle cx=\"" << fmt(map.px(x)) << "\" cy=\"" << fmt(map.py(y))
          << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
    }
  }

  svg << "</svg>\n";
  return svg.str();
}

void render_contour(const PlotSpec& spec, const ZContext& ctx,
                    const std::vector<RootRecord>& roots, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  f << render_contour_svg(spec, ctx, roots);
  if (!f) throw IoError("write failed: " + path);
}

std::string render_basin_ppm(const BasinResult& raster) {
  if (raster.width < 1 || raster.height < 1) throw std::invalid_argument("empty raster");
  static const uint8_t palette[][3] = {{215, 48, 39},  {69, 117, 180}, {254, 224, 144},
                                       {145, 191, 219}, {252, 141, 89}, {224, 243, 248}};
  std::string out = "P6\n" + std::to_string(raster.width) + " " + std::to_string(raster.height) +
                    "\n255\n";
  out.reserve(out.size() + static_cast<size_t>(raster.width) * raster.height * 3);
  for (int row = 0; row < raster.height; ++row) {
    for (int col = 0; col < raster.width; ++col) {
      int l = raster.label_at(row, col);
      if (l < 0) {
        out.append("\xff\xff\xff", 3);
      } else {
        const uint8_t* c = palette[static_cast<size_t>(l) % 6];
        out.push_back(static_cast<char>(c[0]));
        out.push_back(static_cast<char>(c[1]));
        out.push_back(static_cast<char>(c[2]));
      }
    }
  }
  return out;
}

void render_basin(const BasinResult& raster, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  std::string bytes = render_basin_ppm(raster);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw IoError("write failed: " + path);
}

}  // namespace texp
