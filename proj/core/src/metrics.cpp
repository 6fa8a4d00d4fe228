#include "fusebench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>

#include "fusebench/error.hpp"
#include "fusebench/statistics.hpp"

namespace fusebench {

namespace {

constexpr double kDiEpsilon = 1e-12;

template <typename Fn>
std::optional<double> guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const UndefinedMetricError&) {
    return std::nullopt;
  } catch (const DimensionError&) {
    return std::nullopt;
  }
}

}  // namespace

double metric_sd(const Band& band) { return global_stats(band).std; }

double metric_entropy(const Band& band) {
  if (band.width() < 2) {
    throw DimensionError("entropy of first differences needs width >= 2");
  }
  std::map<long long, std::size_t> histogram;
  for (int y = 0; y < band.height(); ++y) {
    auto row = band.row(y);
    for (int x = 0; x + 1 < band.width(); ++x) {
      ++histogram[static_cast<long long>(std::round(row[x + 1] - row[x]))];
    }
  }
  const double total = static_cast<double>(band.height()) * (band.width() - 1);
  double en = 0.0;
  for (const auto& [value, count] : histogram) {
    const double p = static_cast<double>(count) / total;
    en -= p * std::log2(p);
  }
  return en <= 0.0 ? 0.0 : en;
}

double metric_snr(const Band& fused, const Band& reference) {
  require_same_shape(fused, reference, "SNR");
  auto f = fused.samples();
  auto m = reference.samples();
  double signal = 0.0;
  double noise = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    signal += f[i] * f[i];
    noise += (f[i] - m[i]) * (f[i] - m[i]);
  }
  if (noise == 0.0) throw UndefinedMetricError("SNR is infinite: fused equals reference");
  return std::sqrt(signal / noise);
}

double metric_nrmse(const Band& fused, const Band& reference, NrmseScale scale) {
  require_same_shape(fused, reference, "NRMSE");
  auto f = fused.samples();
  auto m = reference.samples();
  double ss = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) ss += (f[i] - m[i]) * (f[i] - m[i]);
  const double full = scale == NrmseScale::kFixed255 ? 255.0 : reference.source_maxval();
  return std::sqrt(ss / (static_cast<double>(f.size()) * full * full));
}

double metric_di(const Band& fused, const Band& reference) {
  require_same_shape(fused, reference, "DI");
  auto f = fused.samples();
  auto m = reference.samples();
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::abs(m[i]) <= kDiEpsilon) continue;
    sum += std::abs(f[i] - m[i]) / std::abs(m[i]);
    ++count;
  }
  if (count == 0) throw UndefinedMetricError("DI is undefined: reference is zero everywhere");
  return sum / static_cast<double>(count);
}

double metric_cc(const Band& fused, const Band& reference) {
  require_same_shape(fused, reference, "CC");
  if (is_constant(fused) || is_constant(reference)) {
    throw UndefinedMetricError("CC is undefined for a constant band");
  }
  const double fm = global_stats(fused).mean;
  const double mm = global_stats(reference).mean;
  auto f = fused.samples();
  auto m = reference.samples();
  double cross = 0.0, ff = 0.0, mmss = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double df = f[i] - fm;
    const double dm = m[i] - mm;
    cross += df * dm;
    ff += df * df;
    mmss += dm * dm;
  }
  return std::clamp(cross / (std::sqrt(ff) * std::sqrt(mmss)), -1.0, 1.0);
}

void MetricsReport::append(const MetricsReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

MetricsReport assess(const MultibandImage& fused, const MultibandImage& reference,
                     std::string_view label) {
  if (fused.band_count() != reference.band_count()) {
    throw DimensionError("assess: band counts differ (" + std::to_string(fused.band_count()) +
                         " vs " + std::to_string(reference.band_count()) + ")");
  }
  require_same_shape(fused.band(0), reference.band(0), "assess");
  MetricsReport report;
  for (std::size_t k = 0; k < fused.band_count(); ++k) {
    const Band& f = fused.band(k);
    const Band& m = reference.band(k);
    MetricsRow row;
    row.method = std::string(label);
    row.band = static_cast<int>(k) + 1;
    row.sd = metric_sd(f);
    row.en = guarded([&] { return metric_entropy(f); });
    row.snr = guarded([&] { return metric_snr(f, m); });
    row.nrmse = metric_nrmse(f, m);
    row.di = guarded([&] { return metric_di(f, m); });
    row.cc = guarded([&] { return metric_cc(f, m); });
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string format_metric(const std::optional<double>& value) {
  if (!value) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", *value == 0.0 ? 0.0 : *value);
  return buf;
}

std::string to_csv_rows(const MetricsReport& report) {
  std::string out;
  for (const MetricsRow& r : report.rows) {
    out += r.method;
    out += ',';
    out += std::to_string(r.band);
    for (const auto* v : {&r.sd, &r.en, &r.snr, &r.nrmse, &r.di, &r.cc}) {
      out += ',';
      out += format_metric(*v);
    }
    out += '\n';
  }
  return out;
}

std::string to_csv(const MetricsReport& report) {
  return std::string(kCsvHeader) + "\n" + to_csv_rows(report);
}

}  // namespace fusebench
