#include "fusebench/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fusebench/error.hpp"
#include "fusebench/parallel.hpp"

namespace fusebench {

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

constexpr int kMaxSweeps = 50;

double off_diagonal_norm(const Mat3& a) {
  return std::sqrt(2.0 * (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]));
}

double frobenius_norm(const Mat3& a) {
  double s = 0.0;
  for (const auto& row : a) {
    for (double v : row) s += v * v;
  }
  return std::sqrt(s);
}

// One Jacobi rotation zeroing a[p][q]; accumulates the rotation into v.
void rotate(Mat3& a, Mat3& v, int p, int q) {
  const double apq = a[p][q];
  if (apq == 0.0) return;
  const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const double app = a[p][p];
  const double aqq = a[q][q];
  a[p][p] = app - t * apq;
  a[q][q] = aqq + t * apq;
  a[p][q] = a[q][p] = 0.0;
  for (int k = 0; k < 3; ++k) {
    if (k == p || k == q) continue;
    const double akp = a[k][p];
    const double akq = a[k][q];
    a[k][p] = a[p][k] = c * akp - s * akq;
    a[k][q] = a[q][k] = s * akp + c * akq;
  }
  for (int k = 0; k < 3; ++k) {
    const double vkp = v[k][p];
    const double vkq = v[k][q];
    v[k][p] = c * vkp - s * vkq;
    v[k][q] = s * vkp + c * vkq;
  }
}

void canonical_sign(PcaBasis& basis) {
  for (int k = 0; k < 3; ++k) {
    int lead = 0;
    for (int r = 1; r < 3; ++r) {
      if (std::abs(basis.vectors[r][k]) > std::abs(basis.vectors[lead][k])) lead = r;
    }
    if (basis.vectors[lead][k] < 0.0) {
      for (int r = 0; r < 3; ++r) basis.vectors[r][k] = -basis.vectors[r][k];
    }
  }
}

}  // namespace

PcaBasis eigen_sym3(const Covariance3& cov) {
  Mat3 a = cov.entries;
  double scale = 1.0;
  for (const auto& row : a) {
    for (double x : row) {
      if (!std::isfinite(x)) throw ParameterError("eigen_sym3: non-finite matrix entry");
      scale = std::max(scale, std::abs(x));
    }
  }
  for (int r = 0; r < 3; ++r) {
    for (int c = r + 1; c < 3; ++c) {
      if (std::abs(a[r][c] - a[c][r]) > 1e-9 * scale) {
        throw ParameterError("eigen_sym3: matrix is not symmetric");
      }
      a[r][c] = a[c][r] = 0.5 * (a[r][c] + a[c][r]);
    }
  }

  Mat3 v{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const double norm = frobenius_norm(a);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= 1e-15 * norm) break;
    rotate(a, v, 0, 1);
    rotate(a, v, 0, 2);
    rotate(a, v, 1, 2);
  }

  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a[i][i] > a[j][j]; });
  PcaBasis basis;
  for (int k = 0; k < 3; ++k) {
    basis.eigenvalues[k] = a[order[k]][order[k]];
    for (int r = 0; r < 3; ++r) basis.vectors[r][k] = v[r][order[k]];
  }
  canonical_sign(basis);
  return basis;
}

PcaBasis pca_basis(const MultibandImage& ms, bool standardized) {
  const Covariance3 cov = covariance3(ms, true);
  return eigen_sym3(standardized ? correlation_from(cov) : cov);
}

PcImage pca_forward(const MultibandImage& img, const PcaBasis& basis) {
  require_band_count(img, 3, "pca_forward");
  const int w = img.width();
  const int h = img.height();
  PcImage out{{Band(w, h, 0.0, img.source_maxval()), Band(w, h, 0.0, img.source_maxval()),
               Band(w, h, 0.0, img.source_maxval())}};
  parallel_rows(h, [&](int y) {
    auto b0 = img.band(0).row(y), b1 = img.band(1).row(y), b2 = img.band(2).row(y);
    for (int k = 0; k < 3; ++k) {
      auto dst = out.pcs[k].row(y);
      const double v0 = basis.vectors[0][k], v1 = basis.vectors[1][k], v2 = basis.vectors[2][k];
      for (int x = 0; x < w; ++x) dst[x] = v0 * b0[x] + v1 * b1[x] + v2 * b2[x];
    }
  });
  return out;
}

MultibandImage pca_inverse(const PcImage& pcs, const PcaBasis& basis) {
  const Band& p0 = pcs.pcs[0];
  require_same_shape(p0, pcs.pcs[1], "pca_inverse");
  require_same_shape(p0, pcs.pcs[2], "pca_inverse");
  const int w = p0.width();
  const int h = p0.height();
  std::vector<Band> bands(3, Band(w, h, 0.0, p0.source_maxval()));
  parallel_rows(h, [&](int y) {
    auto c0 = pcs.pcs[0].row(y), c1 = pcs.pcs[1].row(y), c2 = pcs.pcs[2].row(y);
    for (int j = 0; j < 3; ++j) {
      auto dst = bands[j].row(y);
      const auto& vj = basis.vectors[j];
      for (int x = 0; x < w; ++x) dst[x] = vj[0] * c0[x] + vj[1] * c1[x] + vj[2] * c2[x];
    }
  });
  return MultibandImage(std::move(bands));
}

PcImage pc1_substitute(const PcImage& pcs, const Band& pan) {
  require_same_shape(pcs.pcs[0], pan, "pc1_substitute");
  PcImage out = pcs;
  out.pcs[0] = match_mean_std(pan, global_stats(pcs.pcs[0]));
  out.pcs[0].set_source_maxval(pcs.pcs[0].source_maxval());
  return out;
}

MultibandImage pca_fuse_merged(const MultibandImage& ms, const Band& pan, bool standardized) {
  require_band_count(ms, 3, "pca_fuse_merged");
  require_same_shape(ms.band(0), pan, "pca_fuse_merged");
  const PcaBasis basis = pca_basis(ms, standardized);
  const std::array<double, 3> v1{basis.vectors[0][0], basis.vectors[1][0], basis.vectors[2][0]};

  Band pc1(ms.width(), ms.height(), 0.0, ms.source_maxval());
  {
    auto b0 = ms.band(0).samples(), b1 = ms.band(1).samples(), b2 = ms.band(2).samples();
    auto p = pc1.samples();
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = v1[0] * b0[i] + v1[1] * b1[i] + v1[2] * b2[i];
  }
  const Band matched = match_mean_std(pan, global_stats(pc1));

  std::vector<Band> bands = ms.bands();
  auto m = matched.samples();
  auto p = pc1.samples();
  for (int j = 0; j < 3; ++j) {
    auto dst = bands[j].samples();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += (m[i] - p[i]) * v1[j];
  }
  return MultibandImage(std::move(bands));
}

}  // namespace fusebench
