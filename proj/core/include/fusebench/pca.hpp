#pragma once

#include <array>

#include "fusebench/raster.hpp"
#include "fusebench/statistics.hpp"

namespace fusebench {

// Eigen-decomposition of a symmetric 3x3 matrix. eigenvalues are descending;
// column k of eigenvectors (vectors[row][k]) belongs to eigenvalues[k]. Each
// column is flipped so its largest-magnitude component is positive (ties go
// to the lowest index).
struct PcaBasis {
  std::array<double, 3> eigenvalues{};
  std::array<std::array<double, 3>, 3> vectors{};

  double component(int row, int k) const { return vectors[row][k]; }
};

struct PcImage {
  std::array<Band, 3> pcs;
};

// Cyclic Jacobi rotations. Throws ParameterError when the input is not
// symmetric within 1e-9 (relative to its largest entry, floor 1).
PcaBasis eigen_sym3(const Covariance3& cov);

// Basis from the band covariance, or from the band correlation matrix when
// standardized is set.
PcaBasis pca_basis(const MultibandImage& ms, bool standardized = false);

// PC_k = sum_j v_jk * band_j. No mean centering.
PcImage pca_forward(const MultibandImage& img, const PcaBasis& basis);
// band_j = sum_k v_jk * PC_k.
MultibandImage pca_inverse(const PcImage& pcs, const PcaBasis& basis);

// Replace PC1 by pan matched to PC1's mean and std.
PcImage pc1_substitute(const PcImage& pcs, const Band& pan);

// Single-pass form: fused_j = ms_j + (pan_matched - PC1) * v_j1.
MultibandImage pca_fuse_merged(const MultibandImage& ms, const Band& pan,
                               bool standardized = false);

}  // namespace fusebench
