#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fusebench {

// One real-valued raster plane, row-major. Samples are always finite.
class Band {
 public:
  Band() = default;
  Band(int width, int height, double fill = 0.0, int source_maxval = 255);
  Band(int width, int height, std::vector<double> samples, int source_maxval = 255);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  int source_maxval() const noexcept { return source_maxval_; }
  void set_source_maxval(int maxval);

  double at(int x, int y) const { return samples_[index(x, y)]; }
  double& at(int x, int y) { return samples_[index(x, y)]; }

  // Clamp-to-edge access; used by every 3x3 neighbourhood operation.
  double clamped(int x, int y) const;

  std::span<const double> samples() const noexcept { return samples_; }
  std::span<double> samples() noexcept { return samples_; }
  std::span<const double> row(int y) const;
  std::span<double> row(int y);

  bool same_shape(const Band& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const Band&, const Band&) = default;

 private:
  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  int source_maxval_ = 255;
  std::vector<double> samples_;
};

// Ordered, non-empty list of equally sized bands sharing one source maxval.
class MultibandImage {
 public:
  MultibandImage() = default;
  explicit MultibandImage(std::vector<Band> bands);

  std::size_t band_count() const noexcept { return bands_.size(); }
  int width() const noexcept { return bands_.empty() ? 0 : bands_.front().width(); }
  int height() const noexcept { return bands_.empty() ? 0 : bands_.front().height(); }
  int source_maxval() const noexcept {
    return bands_.empty() ? 255 : bands_.front().source_maxval();
  }

  const Band& band(std::size_t k) const { return bands_.at(k); }
  Band& band(std::size_t k) { return bands_.at(k); }
  const std::vector<Band>& bands() const noexcept { return bands_; }

  friend bool operator==(const MultibandImage&, const MultibandImage&) = default;

 private:
  std::vector<Band> bands_;
};

// Throws DimensionError unless img has exactly `count` bands.
void require_band_count(const MultibandImage& img, std::size_t count, const char* what);
// Throws DimensionError unless a and b have equal width and height.
void require_same_shape(const Band& a, const Band& b, const char* what);

// Block replication: out(x, y) = in(x / factor, y / factor).
Band upsample_nearest(const Band& band, int factor);
MultibandImage upsample_nearest(const MultibandImage& img, int factor);

// Mean of each factor x factor block. Dimensions must be divisible by factor.
Band downsample_box(const Band& band, int factor);
MultibandImage downsample_box(const MultibandImage& img, int factor);

}  // namespace fusebench
