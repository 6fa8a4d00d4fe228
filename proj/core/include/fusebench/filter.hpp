#pragma once

#include <array>

#include "fusebench/raster.hpp"

namespace fusebench {

// 3x3 correlation mask, row-major: coefficient(col, row) multiplies the
// neighbour at offset (col - 1, row - 1).
class Kernel3x3 {
 public:
  constexpr Kernel3x3() = default;
  explicit Kernel3x3(const std::array<double, 9>& coefficients);

  double operator()(int col, int row) const { return coefficients_[row * 3 + col]; }
  const std::array<double, 9>& coefficients() const noexcept { return coefficients_; }
  double sum() const noexcept;

  static Kernel3x3 box();
  // Sobel templates. Note the labelling: the "x" template weights rows,
  // the "y" template weights columns.
  static Kernel3x3 sobel_x();
  static Kernel3x3 sobel_y();
  // Four-neighbour sharpening Laplacian (centre 5, cross -1). This is the
  // mask edge fusion uses.
  static Kernel3x3 laplacian();
  // Eight-neighbour variant (centre 5, edges -2, corners +1). Not used by
  // default.
  static Kernel3x3 laplacian_alt();

 private:
  std::array<double, 9> coefficients_{};
};

struct EdgeField {
  Band magnitude;
  Band direction;  // radians in (-pi, pi], 0 where the gradient vanishes
};

// Same-size 3x3 correlation with replicate padding.
Band convolve3(const Band& band, const Kernel3x3& kernel);

// pan - box(pan).
Band unsharp_mask(const Band& pan);

// |P(x,y) - P(x+1,y)|; last column is 0.
Band diff_horizontal(const Band& pan);
// |P(x,y) - P(x,y+1)|; last row is 0.
Band diff_vertical(const Band& pan);
// |2 P(x,y) - P(x+1,y) - P(x,y+1)|; last row and column are 0.
Band diff_combined(const Band& pan);

// Gradient from the two Sobel templates; magnitude is the Euclidean length.
EdgeField sobel(const Band& pan);

Band laplacian_edges(const Band& pan);

}  // namespace fusebench
