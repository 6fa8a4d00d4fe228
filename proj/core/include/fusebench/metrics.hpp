#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fusebench/raster.hpp"

namespace fusebench {

double metric_sd(const Band& band);

// Shannon entropy (bits) of the rounded horizontal first differences.
// Throws DimensionError for width < 2.
double metric_entropy(const Band& band);

// sqrt(sum F^2 / sum (F - M)^2). Throws UndefinedMetricError when F == M.
double metric_snr(const Band& fused, const Band& reference);

enum class NrmseScale { kFixed255, kSourceMaxval };

// RMSE / 255 by default; kSourceMaxval divides by the reference maxval.
double metric_nrmse(const Band& fused, const Band& reference,
                    NrmseScale scale = NrmseScale::kFixed255);

// Mean of |F - M| / M over pixels with |M| > 1e-12. Throws
// UndefinedMetricError when no such pixel exists.
double metric_di(const Band& fused, const Band& reference);

// Pearson correlation. Throws UndefinedMetricError if either band is
// constant.
double metric_cc(const Band& fused, const Band& reference);

struct MetricsRow {
  std::string method;
  int band = 1;  // 1-based
  std::optional<double> sd;
  std::optional<double> en;
  std::optional<double> snr;
  std::optional<double> nrmse;
  std::optional<double> di;
  std::optional<double> cc;

  friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

struct MetricsReport {
  std::vector<MetricsRow> rows;

  void append(const MetricsReport& other);
};

// One row per band. A metric that is undefined for a band is left empty
// instead of aborting the report.
MetricsReport assess(const MultibandImage& fused, const MultibandImage& reference,
                     std::string_view label);

inline constexpr std::string_view kCsvHeader = "method,band,sd,en,snr,nrmse,di,cc";

// Six significant digits; empty values render as NA.
std::string format_metric(const std::optional<double>& value);
std::string to_csv_rows(const MetricsReport& report);
std::string to_csv(const MetricsReport& report);

}  // namespace fusebench
