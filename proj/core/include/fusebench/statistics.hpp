#pragma once

#include <array>

#include "fusebench/raster.hpp"

namespace fusebench {

// Population statistics (divide by N). std is exactly 0 iff the band is
// constant.
struct BandStats {
  double mean = 0.0;
  double std = 0.0;
};

struct LocalStats {
  Band means;
  Band stds;
};

struct Covariance3 {
  std::array<std::array<double, 3>, 3> entries{};

  double operator()(int r, int c) const { return entries[r][c]; }
  double& operator()(int r, int c) { return entries[r][c]; }
  double trace() const { return entries[0][0] + entries[1][1] + entries[2][2]; }
};

bool is_constant(const Band& band);

BandStats global_stats(const Band& band);

// Windowed mean/std over a replicate-padded odd window.
LocalStats local_stats(const Band& band, int window = 3);

// Affine remap so the result has target.mean and target.std:
//   out = target.mean + (x - mean(src)) * target.std / std(src)
// A constant src is accepted only when target.std == 0.
Band match_mean_std(const Band& src, const BandStats& target);

// Scatter of per-pixel 3-vectors about the mean spectral signature. With
// normalize set the scatter is divided by the pixel count.
Covariance3 covariance3(const MultibandImage& img, bool normalize = true);

// Pearson correlation matrix derived from a covariance. Bands with zero
// variance get a unit diagonal and zero off-diagonals.
Covariance3 correlation_from(const Covariance3& cov);

}  // namespace fusebench
