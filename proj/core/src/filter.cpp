#include "fusebench/filter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "fusebench/error.hpp"
#include "fusebench/parallel.hpp"

namespace fusebench {

Kernel3x3::Kernel3x3(const std::array<double, 9>& coefficients) : coefficients_(coefficients) {
  for (double c : coefficients_) {
    if (!std::isfinite(c)) throw ParameterError("kernel coefficients must be finite");
  }
}

double Kernel3x3::sum() const noexcept {
  return std::accumulate(coefficients_.begin(), coefficients_.end(), 0.0);
}

Kernel3x3 Kernel3x3::box() {
  const double n = 1.0 / 9.0;
  return Kernel3x3({n, n, n, n, n, n, n, n, n});
}

Kernel3x3 Kernel3x3::sobel_x() {
  return Kernel3x3({-1, -2, -1,
                     0,  0,  0,
                     1,  2,  1});
}

Kernel3x3 Kernel3x3::sobel_y() {
  return Kernel3x3({-1, 0, 1,
                    -2, 0, 2,
                    -1, 0, 1});
}

Kernel3x3 Kernel3x3::laplacian() {
  return Kernel3x3({ 0, -1,  0,
                    -1,  5, -1,
                     0, -1,  0});
}

Kernel3x3 Kernel3x3::laplacian_alt() {
  return Kernel3x3({ 1, -2,  1,
                    -2,  5, -2,
                     1, -2,  1});
}

Band convolve3(const Band& band, const Kernel3x3& kernel) {
  const int w = band.width();
  const int h = band.height();
  Band out(w, h, 0.0, band.source_maxval());
  const auto& k = kernel.coefficients();
  parallel_rows(h, [&](int y) {
    auto dst = out.row(y);
    auto above = band.row(std::max(y - 1, 0));
    auto mid = band.row(y);
    auto below = band.row(std::min(y + 1, h - 1));
    for (int x = 0; x < w; ++x) {
      const int xl = std::max(x - 1, 0);
      const int xr = std::min(x + 1, w - 1);
      dst[x] = k[0] * above[xl] + k[1] * above[x] + k[2] * above[xr] +
               k[3] * mid[xl] + k[4] * mid[x] + k[5] * mid[xr] +
               k[6] * below[xl] + k[7] * below[x] + k[8] * below[xr];
    }
  });
  return out;
}

Band unsharp_mask(const Band& pan) {
  Band out = convolve3(pan, Kernel3x3::box());
  auto src = pan.samples();
  auto dst = out.samples();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = src[i] - dst[i];
  return out;
}

Band diff_horizontal(const Band& pan) {
  Band out(pan.width(), pan.height(), 0.0, pan.source_maxval());
  for (int y = 0; y < pan.height(); ++y) {
    for (int x = 0; x + 1 < pan.width(); ++x) {
      out.at(x, y) = std::abs(pan.at(x, y) - pan.at(x + 1, y));
    }
  }
  return out;
}

Band diff_vertical(const Band& pan) {
  Band out(pan.width(), pan.height(), 0.0, pan.source_maxval());
  for (int y = 0; y + 1 < pan.height(); ++y) {
    for (int x = 0; x < pan.width(); ++x) {
      out.at(x, y) = std::abs(pan.at(x, y) - pan.at(x, y + 1));
    }
  }
  return out;
}

Band diff_combined(const Band& pan) {
  Band out(pan.width(), pan.height(), 0.0, pan.source_maxval());
  for (int y = 0; y + 1 < pan.height(); ++y) {
    for (int x = 0; x + 1 < pan.width(); ++x) {
      out.at(x, y) = std::abs(2.0 * pan.at(x, y) - pan.at(x + 1, y) - pan.at(x, y + 1));
    }
  }
  return out;
}

EdgeField sobel(const Band& pan) {
  const Band mx = convolve3(pan, Kernel3x3::sobel_x());
  const Band my = convolve3(pan, Kernel3x3::sobel_y());
  EdgeField field{Band(pan.width(), pan.height(), 0.0, pan.source_maxval()),
                  Band(pan.width(), pan.height(), 0.0, pan.source_maxval())};
  auto gx = mx.samples(), gy = my.samples();
  auto mag = field.magnitude.samples(), dir = field.direction.samples();
  for (std::size_t i = 0; i < mag.size(); ++i) {
    mag[i] = std::hypot(gx[i], gy[i]);
    double theta = (gx[i] == 0.0 && gy[i] == 0.0) ? 0.0 : std::atan2(gy[i], gx[i]);
    if (theta == -std::numbers::pi) theta = std::numbers::pi;
    dir[i] = theta;
  }
  return field;
}

Band laplacian_edges(const Band& pan) { return convolve3(pan, Kernel3x3::laplacian()); }

}  // namespace fusebench
