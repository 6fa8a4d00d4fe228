#pragma once

#include "fusebench/raster.hpp"

namespace fusebench {

// Linear (triangular) IHS model:
//   I  = (R + G + B) / 3
//   v1 = (-R - G + 2B) / sqrt(6)
//   v2 = (R - G) / sqrt(2)
//   H  = atan2(v2, v1) in [0, 2pi),  S = hypot(v1, v2)
// Hue is pinned to 0 wherever S == 0.
struct IhsTriple {
  Band intensity;
  Band hue;
  Band saturation;
};

IhsTriple rgb_to_ihs(const MultibandImage& rgb);

// Exact inverse of rgb_to_ihs. The output carries the intensity plane's
// source maxval.
MultibandImage ihs_to_rgb(const IhsTriple& ihs);

// Intensity plane alone; same values as rgb_to_ihs(rgb).intensity.
Band intensity_of(const MultibandImage& rgb);

}  // namespace fusebench
