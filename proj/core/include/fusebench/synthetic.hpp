#pragma once

#include <cstdint>

#include "fusebench/raster.hpp"

namespace fusebench {

// Defaults give a 600x525 frame, i.e. a 120x105 MS image at factor 5.
struct SceneOptions {
  int width = 600;
  int height = 525;
  std::uint64_t seed = 23;
  double field_area = 6000.0;     // mean pixels per land-cover field
  double building_area = 2500.0;  // one building per this many pixels
  double texture = 3.0;           // in-field texture amplitude
  double blur_sigma = 1.0;        // Gaussian sensor PSF, pixels
  double gradient = 60.0;         // broad spectral (moisture) gradient amplitude
  double noise = 3.0;             // uniform sensor noise half-width
};

// Deterministic 8-bit RGB test scene: Voronoi land-cover fields with distinct
// spectra, an illumination ramp, a broad spectral gradient, in-field texture,
// roads and buildings, blurred by a Gaussian PSF. Values stay inside
// [16, 240] so no reference pixel is zero.
MultibandImage synthetic_scene(const SceneOptions& options = {});

struct DegradedPair {
  Band pan;            // intensity of the reference, full resolution
  MultibandImage ms;   // reference box-averaged by `factor`
};

// Throws DimensionError when the reference is not divisible by factor.
DegradedPair degrade(const MultibandImage& reference, int factor);

}  // namespace fusebench
