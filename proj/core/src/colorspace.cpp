#include "fusebench/colorspace.hpp"

#include <cmath>
#include <numbers>

#include "fusebench/error.hpp"
#include "fusebench/parallel.hpp"

namespace fusebench {

namespace {

const double kInvSqrt6 = 1.0 / std::sqrt(6.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

IhsTriple rgb_to_ihs(const MultibandImage& rgb) {
  require_band_count(rgb, 3, "rgb_to_ihs");
  const Band& r = rgb.band(0);
  const Band& g = rgb.band(1);
  const Band& b = rgb.band(2);
  const int w = rgb.width();
  const int h = rgb.height();
  IhsTriple out{Band(w, h, 0.0, rgb.source_maxval()), Band(w, h, 0.0, rgb.source_maxval()),
                Band(w, h, 0.0, rgb.source_maxval())};
  parallel_rows(h, [&](int y) {
    auto rr = r.row(y), gg = g.row(y), bb = b.row(y);
    auto ii = out.intensity.row(y), hh = out.hue.row(y), ss = out.saturation.row(y);
    for (int x = 0; x < w; ++x) {
      const double v1 = (2.0 * bb[x] - rr[x] - gg[x]) * kInvSqrt6;
      const double v2 = (rr[x] - gg[x]) * kInvSqrt2;
      ii[x] = (rr[x] + gg[x] + bb[x]) / 3.0;
      ss[x] = std::hypot(v1, v2);
      double hue = ss[x] == 0.0 ? 0.0 : std::atan2(v2, v1);
      if (hue < 0.0) hue += 2.0 * std::numbers::pi;
      if (hue >= 2.0 * std::numbers::pi) hue = 0.0;
      hh[x] = hue;
    }
  });
  return out;
}

MultibandImage ihs_to_rgb(const IhsTriple& ihs) {
  const Band& in = ihs.intensity;
  require_same_shape(in, ihs.hue, "ihs_to_rgb");
  require_same_shape(in, ihs.saturation, "ihs_to_rgb");
  const int w = in.width();
  const int h = in.height();
  std::vector<Band> bands(3, Band(w, h, 0.0, in.source_maxval()));
  parallel_rows(h, [&](int y) {
    auto ii = in.row(y), hh = ihs.hue.row(y), ss = ihs.saturation.row(y);
    auto rr = bands[0].row(y), gg = bands[1].row(y), bb = bands[2].row(y);
    for (int x = 0; x < w; ++x) {
      const double v1 = ss[x] * std::cos(hh[x]);
      const double v2 = ss[x] * std::sin(hh[x]);
      rr[x] = ii[x] - v1 * kInvSqrt6 + v2 * kInvSqrt2;
      gg[x] = ii[x] - v1 * kInvSqrt6 - v2 * kInvSqrt2;
      bb[x] = ii[x] + 2.0 * v1 * kInvSqrt6;
    }
  });
  return MultibandImage(std::move(bands));
}

Band intensity_of(const MultibandImage& rgb) {
  require_band_count(rgb, 3, "intensity_of");
  Band out(rgb.width(), rgb.height(), 0.0, rgb.source_maxval());
  auto r = rgb.band(0).samples(), g = rgb.band(1).samples(), b = rgb.band(2).samples();
  auto o = out.samples();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = (r[i] + g[i] + b[i]) / 3.0;
  return out;
}

}  // namespace fusebench
