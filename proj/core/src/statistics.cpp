#include "fusebench/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fusebench/error.hpp"
#include "fusebench/parallel.hpp"

namespace fusebench {

bool is_constant(const Band& band) {
  auto s = band.samples();
  return std::all_of(s.begin(), s.end(), [first = s.front()](double v) { return v == first; });
}

BandStats global_stats(const Band& band) {
  auto s = band.samples();
  if (is_constant(band)) return {s.front(), 0.0};
  const double n = static_cast<double>(s.size());
  double sum = 0.0;
  for (double v : s) sum += v;
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : s) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / n)};
}

LocalStats local_stats(const Band& band, int window) {
  if (window < 1 || window % 2 == 0) {
    throw ParameterError("window must be a positive odd integer, got " + std::to_string(window));
  }
  const int w = band.width();
  const int h = band.height();
  const int r = window / 2;
  const double n = static_cast<double>(window) * static_cast<double>(window);
  LocalStats out{Band(w, h, 0.0, band.source_maxval()), Band(w, h, 0.0, band.source_maxval())};
  parallel_rows(h, [&](int y) {
    for (int x = 0; x < w; ++x) {
      double sum = 0.0;
      bool constant = true;
      const double first = band.clamped(x - r, y - r);
      for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) {
          const double v = band.clamped(x + dx, y + dy);
          sum += v;
          constant = constant && v == first;
        }
      }
      if (constant) {
        out.means.at(x, y) = first;
        continue;
      }
      const double mean = sum / n;
      double ss = 0.0;
      for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) {
          const double d = band.clamped(x + dx, y + dy) - mean;
          ss += d * d;
        }
      }
      out.means.at(x, y) = mean;
      out.stds.at(x, y) = std::sqrt(ss / n);
    }
  });
  return out;
}

Band match_mean_std(const Band& src, const BandStats& target) {
  const BandStats s = global_stats(src);
  Band out(src.width(), src.height(), target.mean, src.source_maxval());
  if (s.std == 0.0) {
    if (target.std == 0.0) return out;
    throw DegenerateError("cannot match a constant band to a target with non-zero spread");
  }
  const double gain = target.std / s.std;
  auto in = src.samples();
  auto o = out.samples();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = target.mean + (in[i] - s.mean) * gain;
  return out;
}

Covariance3 covariance3(const MultibandImage& img, bool normalize) {
  require_band_count(img, 3, "covariance3");
  const std::size_t n = img.band(0).size();
  std::array<double, 3> mean{};
  for (int k = 0; k < 3; ++k) mean[k] = global_stats(img.band(k)).mean;
  Covariance3 cov;
  std::array<std::span<const double>, 3> b{img.band(0).samples(), img.band(1).samples(),
                                           img.band(2).samples()};
  for (std::size_t i = 0; i < n; ++i) {
    const std::array<double, 3> d{b[0][i] - mean[0], b[1][i] - mean[1], b[2][i] - mean[2]};
    for (int r = 0; r < 3; ++r) {
      for (int c = r; c < 3; ++c) cov(r, c) += d[r] * d[c];
    }
  }
  const double scale = normalize ? 1.0 / static_cast<double>(n) : 1.0;
  for (int r = 0; r < 3; ++r) {
    for (int c = r; c < 3; ++c) {
      cov(r, c) *= scale;
      cov(c, r) = cov(r, c);
    }
  }
  return cov;
}

Covariance3 correlation_from(const Covariance3& cov) {
  Covariance3 corr;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const double denom = std::sqrt(cov(r, r) * cov(c, c));
      if (r == c) {
        corr(r, c) = 1.0;
      } else {
        corr(r, c) = denom > 0.0 ? std::clamp(cov(r, c) / denom, -1.0, 1.0) : 0.0;
      }
    }
  }
  return corr;
}

}  // namespace fusebench
