#include "fusebench/pipeline.hpp"

#include <chrono>
#include <string>

#include "fusebench/colorspace.hpp"
#include "fusebench/error.hpp"
#include "fusebench/filter.hpp"
#include "fusebench/netpbm.hpp"
#include "fusebench/pca.hpp"
#include "fusebench/statistics.hpp"

namespace fusebench {

namespace {

void check_inputs(const MultibandImage& ms, const Band& pan, const char* what) {
  require_band_count(ms, 3, what);
  require_same_shape(ms.band(0), pan, what);
}

Band add(const Band& a, const Band& b) {
  Band out = a;
  auto o = out.samples();
  auto s = b.samples();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] += s[i];
  return out;
}

// Shared tail of SF and EF: I* = box(I) + detail, matched to stats(I),
// inverted with the untouched hue and saturation.
MultibandImage inject_intensity_detail(const MultibandImage& ms, const Band& detail) {
  IhsTriple ihs = rgb_to_ihs(ms);
  const Band sharpened = add(convolve3(ihs.intensity, Kernel3x3::box()), detail);
  Band matched = match_mean_std(sharpened, global_stats(ihs.intensity));
  matched.set_source_maxval(ms.source_maxval());
  ihs.intensity = std::move(matched);
  return ihs_to_rgb(ihs);
}

}  // namespace

std::string_view to_string(FusionMethod method) {
  switch (method) {
    case FusionMethod::kSegment: return "SF";
    case FusionMethod::kPca: return "PCA";
    case FusionMethod::kEdge: return "EF";
  }
  return "?";
}

std::string_view to_string(EdgeOperator op) {
  switch (op) {
    case EdgeOperator::kSobel: return "sobel";
    case EdgeOperator::kLaplacian: return "laplacian";
    case EdgeOperator::kSumOfBoth: return "sum_of_both";
  }
  return "?";
}

std::optional<FusionMethod> parse_method(std::string_view text) {
  if (text == "sf") return FusionMethod::kSegment;
  if (text == "pca") return FusionMethod::kPca;
  if (text == "ef") return FusionMethod::kEdge;
  return std::nullopt;
}

std::optional<EdgeOperator> parse_edge_operator(std::string_view text) {
  if (text == "sobel") return EdgeOperator::kSobel;
  if (text == "laplacian") return EdgeOperator::kLaplacian;
  if (text == "sum_of_both") return EdgeOperator::kSumOfBoth;
  return std::nullopt;
}

void FusionConfig::validate() const {
  if (upsample_factor < 1) {
    throw ParameterError("upsample factor must be >= 1, got " + std::to_string(upsample_factor));
  }
}

MultibandImage fuse_sf(const MultibandImage& ms, const Band& pan) {
  check_inputs(ms, pan, "segment fusion");
  return inject_intensity_detail(ms, unsharp_mask(pan));
}

MultibandImage fuse_pca(const MultibandImage& ms, const Band& pan, bool standardized) {
  check_inputs(ms, pan, "PCA fusion");
  const PcaBasis basis = pca_basis(ms, standardized);
  return pca_inverse(pc1_substitute(pca_forward(ms, basis), pan), basis);
}

Band edge_detail(const Band& pan, EdgeOperator op) {
  Band response = [&] {
    switch (op) {
      case EdgeOperator::kSobel: return sobel(pan).magnitude;
      case EdgeOperator::kLaplacian: return laplacian_edges(pan);
      case EdgeOperator::kSumOfBoth: return add(sobel(pan).magnitude, laplacian_edges(pan));
    }
    throw ParameterError("unknown edge operator");
  }();
  return unsharp_mask(response);
}

MultibandImage fuse_ef(const MultibandImage& ms, const Band& pan, EdgeOperator op) {
  check_inputs(ms, pan, "edge fusion");
  return inject_intensity_detail(ms, edge_detail(pan, op));
}

MultibandImage fuse(const FusionConfig& config, const MultibandImage& ms, const Band& pan) {
  config.validate();
  switch (config.method) {
    case FusionMethod::kSegment: return fuse_sf(ms, pan);
    case FusionMethod::kPca: return fuse_pca(ms, pan, config.pca_standardized);
    case FusionMethod::kEdge: return fuse_ef(ms, pan, config.edge_operator);
  }
  throw ParameterError("unknown fusion method");
}

FusionSummary run_fusion(const FusionConfig& config, const std::filesystem::path& ms_path,
                         const std::filesystem::path& pan_path,
                         const std::filesystem::path& out_path) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const MultibandImage ms = netpbm::read_ppm(ms_path);
  const Band pan = netpbm::read_pgm(pan_path);
  const int f = config.upsample_factor;
  if (ms.width() * f != pan.width() || ms.height() * f != pan.height()) {
    throw DimensionError("MS " + std::to_string(ms.width()) + "x" + std::to_string(ms.height()) +
                         " times factor " + std::to_string(f) + " does not match PAN " +
                         std::to_string(pan.width()) + "x" + std::to_string(pan.height()));
  }
  const MultibandImage up = upsample_nearest(ms, f);
  MultibandImage fused;
  try {
    fused = fuse(config, up, pan);
  } catch (const DegenerateError& e) {
    throw DegenerateError(std::string(to_string(config.method)) + " fusion: " + e.what());
  }
  netpbm::write_ppm(fused, out_path, ms.source_maxval());

  FusionSummary summary;
  summary.method = config.method;
  summary.width = fused.width();
  summary.height = fused.height();
  summary.ms_width = ms.width();
  summary.ms_height = ms.height();
  summary.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace fusebench
