#include "fusebench/raster.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fusebench/error.hpp"
#include "fusebench/parallel.hpp"

namespace fusebench {

namespace {

void check_extent(int width, int height) {
  if (width < 1 || height < 1) {
    throw DimensionError("band dimensions must be at least 1x1, got " + std::to_string(width) +
                         "x" + std::to_string(height));
  }
}

void check_maxval(int maxval) {
  if (maxval < 1 || maxval > 65535) {
    throw ParameterError("maxval must be in [1, 65535], got " + std::to_string(maxval));
  }
}

void check_factor(int factor) {
  if (factor < 1) {
    throw ParameterError("resampling factor must be >= 1, got " + std::to_string(factor));
  }
}

}  // namespace

Band::Band(int width, int height, double fill, int source_maxval)
    : width_(width), height_(height), source_maxval_(source_maxval) {
  check_extent(width, height);
  check_maxval(source_maxval);
  if (!std::isfinite(fill)) throw ParameterError("band fill value must be finite");
  samples_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

Band::Band(int width, int height, std::vector<double> samples, int source_maxval)
    : width_(width), height_(height), source_maxval_(source_maxval), samples_(std::move(samples)) {
  check_extent(width, height);
  check_maxval(source_maxval);
  if (samples_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw DimensionError("sample count " + std::to_string(samples_.size()) + " does not match " +
                         std::to_string(width) + "x" + std::to_string(height));
  }
  if (!std::all_of(samples_.begin(), samples_.end(), [](double v) { return std::isfinite(v); })) {
    throw ParameterError("band samples must be finite");
  }
}

void Band::set_source_maxval(int maxval) {
  check_maxval(maxval);
  source_maxval_ = maxval;
}

double Band::clamped(int x, int y) const {
  x = std::clamp(x, 0, width_ - 1);
  y = std::clamp(y, 0, height_ - 1);
  return samples_[index(x, y)];
}

std::span<const double> Band::row(int y) const {
  return std::span<const double>(samples_).subspan(index(0, y), static_cast<std::size_t>(width_));
}

std::span<double> Band::row(int y) {
  return std::span<double>(samples_).subspan(index(0, y), static_cast<std::size_t>(width_));
}

MultibandImage::MultibandImage(std::vector<Band> bands) : bands_(std::move(bands)) {
  if (bands_.empty()) throw DimensionError("multiband image needs at least one band");
  const Band& first = bands_.front();
  for (const Band& b : bands_) {
    if (!b.same_shape(first)) {
      throw DimensionError("all bands must share dimensions");
    }
    if (b.source_maxval() != first.source_maxval()) {
      throw DimensionError("all bands must share source maxval");
    }
  }
}

void require_band_count(const MultibandImage& img, std::size_t count, const char* what) {
  if (img.band_count() != count) {
    throw DimensionError(std::string(what) + ": expected " + std::to_string(count) +
                         " bands, got " + std::to_string(img.band_count()));
  }
}

void require_same_shape(const Band& a, const Band& b, const char* what) {
  if (!a.same_shape(b)) {
    throw DimensionError(std::string(what) + ": dimension mismatch " + std::to_string(a.width()) +
                         "x" + std::to_string(a.height()) + " vs " + std::to_string(b.width()) +
                         "x" + std::to_string(b.height()));
  }
}

Band upsample_nearest(const Band& band, int factor) {
  check_factor(factor);
  Band out(band.width() * factor, band.height() * factor, 0.0, band.source_maxval());
  parallel_rows(out.height(), [&](int y) {
    auto dst = out.row(y);
    auto src = band.row(y / factor);
    for (int x = 0; x < out.width(); ++x) dst[x] = src[x / factor];
  });
  return out;
}

MultibandImage upsample_nearest(const MultibandImage& img, int factor) {
  std::vector<Band> bands;
  bands.reserve(img.band_count());
  for (const Band& b : img.bands()) bands.push_back(upsample_nearest(b, factor));
  return MultibandImage(std::move(bands));
}

Band downsample_box(const Band& band, int factor) {
  check_factor(factor);
  if (band.width() % factor != 0 || band.height() % factor != 0) {
    throw DimensionError("dimensions " + std::to_string(band.width()) + "x" +
                         std::to_string(band.height()) + " are not divisible by factor " +
                         std::to_string(factor));
  }
  Band out(band.width() / factor, band.height() / factor, 0.0, band.source_maxval());
  const double area = static_cast<double>(factor) * static_cast<double>(factor);
  parallel_rows(out.height(), [&](int y) {
    for (int x = 0; x < out.width(); ++x) {
      double sum = 0.0;
      for (int dy = 0; dy < factor; ++dy) {
        for (int dx = 0; dx < factor; ++dx) sum += band.at(x * factor + dx, y * factor + dy);
      }
      out.at(x, y) = sum / area;
    }
  });
  return out;
}

MultibandImage downsample_box(const MultibandImage& img, int factor) {
  std::vector<Band> bands;
  bands.reserve(img.band_count());
  for (const Band& b : img.bands()) bands.push_back(downsample_box(b, factor));
  return MultibandImage(std::move(bands));
}

}  // namespace fusebench
