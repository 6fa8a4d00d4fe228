#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "fusebench/raster.hpp"

namespace fusebench {

enum class FusionMethod { kSegment, kPca, kEdge };
enum class EdgeOperator { kSobel, kLaplacian, kSumOfBoth };

std::string_view to_string(FusionMethod method);
std::string_view to_string(EdgeOperator op);
// Accepts the CLI spellings: "sf" / "pca" / "ef" and "sobel" / "laplacian" /
// "sum_of_both". Returns nullopt for anything else.
std::optional<FusionMethod> parse_method(std::string_view text);
std::optional<EdgeOperator> parse_edge_operator(std::string_view text);

struct FusionConfig {
  FusionMethod method = FusionMethod::kSegment;
  EdgeOperator edge_operator = EdgeOperator::kLaplacian;
  bool pca_standardized = false;
  int upsample_factor = 1;

  // Throws ParameterError on upsample_factor < 1.
  void validate() const;
};

// Segment fusion: IHS forward, I* = box(I) + unsharp_mask(pan), I* matched to
// the global mean/std of I, inverse IHS with the original hue and saturation.
MultibandImage fuse_sf(const MultibandImage& ms, const Band& pan);

// PCA fusion via the explicit forward -> PC1 substitution -> inverse route.
MultibandImage fuse_pca(const MultibandImage& ms, const Band& pan, bool standardized = false);

// Zero-mean edge detail plane: response - box(response), where response is
// the Sobel magnitude, the Laplacian response, or their sum.
Band edge_detail(const Band& pan, EdgeOperator op);

// Edge fusion: as segment fusion but the detail term is edge_detail(pan, op).
MultibandImage fuse_ef(const MultibandImage& ms, const Band& pan,
                       EdgeOperator op = EdgeOperator::kLaplacian);

// Dispatch on config.method; ms and pan must already share dimensions.
MultibandImage fuse(const FusionConfig& config, const MultibandImage& ms, const Band& pan);

struct FusionSummary {
  FusionMethod method = FusionMethod::kSegment;
  int width = 0;
  int height = 0;
  int ms_width = 0;
  int ms_height = 0;
  double seconds = 0.0;
};

// Load MS (PPM) and PAN (PGM), upsample MS by config.upsample_factor, fuse,
// write the result as a PPM at the MS maxval.
FusionSummary run_fusion(const FusionConfig& config, const std::filesystem::path& ms_path,
                         const std::filesystem::path& pan_path,
                         const std::filesystem::path& out_path);

}  // namespace fusebench
