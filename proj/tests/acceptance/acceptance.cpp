// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "commands.hpp"
#include "fusebench/fusebench.hpp"
#include "test_support.hpp"

namespace fb = fusebench;
namespace fs = std::filesystem;
using fb::testing::Gen;
using fb::testing::max_abs_diff;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome ihs_round_trip() {
  Outcome o;
  Gen gen(1001);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const fb::MultibandImage rgb = gen.rgb(64, 64);
    worst = std::max(worst, max_abs_diff(fb::ihs_to_rgb(fb::rgb_to_ihs(rgb)), rgb));
  }
  o.check(worst <= 1e-9, "max error " + fmt("%.3g", worst));
  o.detail = o.pass ? "max error " + fmt("%.3g", worst) : o.detail;
  return o;
}

Outcome pca_dual_route() {
  Outcome o;
  Gen gen(1002);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const fb::MultibandImage ms = gen.correlated_rgb(32, 32);
    const fb::Band pan = gen.band(32, 32);
    const fb::PcaBasis basis = fb::pca_basis(ms);
    const fb::MultibandImage explicit_route =
        fb::pca_inverse(fb::pc1_substitute(fb::pca_forward(ms, basis), pan), basis);
    worst = std::max(worst, max_abs_diff(fb::pca_fuse_merged(ms, pan), explicit_route));
  }
  o.check(worst <= 1e-9, "max difference " + fmt("%.3g", worst));
  if (o.pass) o.detail = "max difference " + fmt("%.3g", worst);
  return o;
}

Outcome eigen_contract() {
  Outcome o;
  Gen gen(1003);
  double worst_res = 0.0;
  double worst_orth = 0.0;
  for (int t = 0; t < 1000; ++t) {
    std::array<std::array<double, 3>, 3> b{};
    for (auto& row : b) {
      for (double& v : row) v = gen.uniform(-100.0, 100.0);
    }
    fb::Covariance3 a;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) a(i, j) += b[k][i] * b[k][j];
      }
    }
    const fb::PcaBasis e = fb::eigen_sym3(a);
    o.check(e.eigenvalues[0] >= e.eigenvalues[1] && e.eigenvalues[1] >= e.eigenvalues[2],
            "eigenvalues not descending");
    for (int k = 0; k < 3; ++k) {
      double r2 = 0.0;
      for (int i = 0; i < 3; ++i) {
        double av = 0.0;
        for (int j = 0; j < 3; ++j) av += a(i, j) * e.component(j, k);
        const double d = av - e.eigenvalues[k] * e.component(i, k);
        r2 += d * d;
      }
      worst_res = std::max(worst_res, std::sqrt(r2) / (a.trace() + std::abs(e.eigenvalues[k])));
      for (int l = 0; l < 3; ++l) {
        double dot = 0.0;
        for (int i = 0; i < 3; ++i) dot += e.component(i, k) * e.component(i, l);
        worst_orth = std::max(worst_orth, std::abs(dot - (k == l ? 1.0 : 0.0)));
      }
    }
  }
  o.check(worst_res <= 1e-9, "relative residual " + fmt("%.3g", worst_res));
  o.check(worst_orth <= 1e-9, "orthonormality error " + fmt("%.3g", worst_orth));
  if (o.pass) {
    o.detail = "residual " + fmt("%.3g", worst_res) + ", orthonormality " + fmt("%.3g", worst_orth);
  }
  return o;
}

Outcome convolution_oracle() {
  Outcome o;
  Gen gen(1004);
  double worst = 0.0;
  for (const fb::Kernel3x3& k : {fb::Kernel3x3::box(), fb::Kernel3x3::sobel_x(),
                                 fb::Kernel3x3::sobel_y(), fb::Kernel3x3::laplacian()}) {
    for (int i = 0; i < 50; ++i) {
      const fb::Band b = gen.band(gen.integer(1, 40), gen.integer(1, 40));
      worst = std::max(worst, max_abs_diff(fb::convolve3(b, k),
                                           fb::testing::oracle_convolve(b, k.coefficients())));
    }
  }
  o.check(worst <= 1e-12, "max difference " + fmt("%.3g", worst));
  if (o.pass) o.detail = "max difference " + fmt("%.3g", worst);
  return o;
}

Outcome metric_identities() {
  Outcome o;
  Gen gen(1005);
  for (int i = 0; i < 20; ++i) {
    const fb::Band x = gen.band(24, 24, 1.0, 255.0);
    const fb::Band m = gen.band(24, 24, 1.0, 255.0);
    fb::Band lin = x;
    for (double& v : lin.samples()) v = 2.0 * v + 3.0;
    const double c = gen.uniform(0.1, 10.0) * (i % 2 ? -1.0 : 1.0);
    fb::Band cx = x;
    fb::Band cm = m;
    for (double& v : cx.samples()) v *= c;
    for (double& v : cm.samples()) v *= c;
    o.check(fb::metric_nrmse(x, x) == 0.0, "NRMSE(x,x) != 0");
    o.check(fb::metric_di(x, x) == 0.0, "DI(x,x) != 0");
    o.check(std::abs(fb::metric_cc(x, lin) - 1.0) <= 1e-12, "CC(x,2x+3) != 1");
    o.check(std::abs(fb::metric_snr(cx, cm) - fb::metric_snr(x, m)) <= 1e-9, "SNR not scale invariant");
    o.check(fb::metric_entropy(fb::Band(24, 24, gen.uniform(0.0, 255.0))) == 0.0,
            "entropy of constant band != 0");
  }
  if (o.pass) o.detail = "20 bands";
  return o;
}

Outcome sf_fixed_point() {
  Outcome o;
  Gen gen(1006);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const fb::MultibandImage ms = gen.rgb(48, 40);
    worst = std::max(worst, max_abs_diff(fb::fuse_sf(ms, fb::intensity_of(ms)), ms));
  }
  o.check(worst <= 1e-9, "max difference " + fmt("%.3g", worst));
  if (o.pass) o.detail = "max difference " + fmt("%.3g", worst);
  return o;
}

Outcome chromaticity_pass_through() {
  Outcome o;
  Gen gen(1007);
  double worst_hs = 0.0;
  double worst_stats = 0.0;
  auto measure = [&](const fb::MultibandImage& ms, const fb::MultibandImage& fused) {
    const fb::IhsTriple a = fb::rgb_to_ihs(ms);
    const fb::IhsTriple b = fb::rgb_to_ihs(fused);
    worst_hs = std::max(worst_hs, max_abs_diff(a.saturation, b.saturation));
    for (std::size_t i = 0; i < a.hue.size(); ++i) {
      if (a.saturation.samples()[i] > 1e-6) {
        worst_hs = std::max(worst_hs,
                            fb::testing::angle_diff(a.hue.samples()[i], b.hue.samples()[i]));
      }
    }
    const fb::BandStats sa = fb::global_stats(a.intensity);
    const fb::BandStats sb = fb::global_stats(b.intensity);
    worst_stats = std::max({worst_stats, std::abs(sa.mean - sb.mean), std::abs(sa.std - sb.std)});
  };
  for (int i = 0; i < 10; ++i) {
    const fb::MultibandImage ms = gen.rgb(40, 32);
    const fb::Band pan = gen.band(40, 32);
    measure(ms, fb::fuse_sf(ms, pan));
    for (auto op : {fb::EdgeOperator::kSobel, fb::EdgeOperator::kLaplacian,
                    fb::EdgeOperator::kSumOfBoth}) {
      measure(ms, fb::fuse_ef(ms, pan, op));
    }
  }
  o.check(worst_hs <= 1e-9, "hue/saturation drift " + fmt("%.3g", worst_hs));
  o.check(worst_stats <= 1e-9, "intensity stats drift " + fmt("%.3g", worst_stats));
  if (o.pass) {
    o.detail = "hue/sat " + fmt("%.3g", worst_hs) + ", intensity stats " + fmt("%.3g", worst_stats);
  }
  return o;
}

Outcome method_ranking(const fs::path& root) {
  Outcome o;
  fb::cli::BenchArgs args;
  args.out_dir = root / "ranking";
  const fb::cli::BenchResult r = fb::cli::cmd_bench(args);
  auto row = [&](const std::string& method, int band) -> const fb::MetricsRow* {
    for (const auto& x : r.report.rows) {
      if (x.method == method && x.band == band) return &x;
    }
    return nullptr;
  };
  double margin_cc = 1.0;
  double margin_di = 1.0;
  for (int band = 1; band <= 3; ++band) {
    const fb::MetricsRow* base = row("ORIGIN", band);
    const fb::MetricsRow* pca = row("PCA", band);
    const fb::MetricsRow* sf = row("SF", band);
    if (!base || !pca || !sf || !base->cc || !sf->di || !pca->di) {
      o.check(false, "missing rows for band " + std::to_string(band));
      continue;
    }
    for (const char* m : {"EF", "PCA", "SF"}) {
      const fb::MetricsRow* f = row(m, band);
      const bool ok = f && f->cc && *f->cc > *base->cc;
      o.check(ok, std::string(m) + " CC not above baseline on band " + std::to_string(band));
      if (ok) margin_cc = std::min(margin_cc, *f->cc - *base->cc);
    }
    o.check(*sf->di < *pca->di, "SF DI not below PCA DI on band " + std::to_string(band));
    margin_di = std::min(margin_di, *pca->di - *sf->di);
  }
  if (o.pass) {
    o.detail = "min CC gain " + fmt("%.4f", margin_cc) + ", min DI gap " + fmt("%.4f", margin_di);
  }
  return o;
}

Outcome file_format(const fs::path& root) {
  Outcome o;
  Gen gen(1009);
  const fs::path dir = root / "format";
  fs::create_directories(dir);
  for (int i = 0; i < 24; ++i) {
    const int maxval = std::array{1, 63, 255, 256, 4095, 65535}[i % 6];
    const int w = gen.integer(1, 33);
    const int h = gen.integer(1, 33);
    const fb::Band b = gen.integer_band(w, h, maxval);
    fb::netpbm::write_pgm(b, dir / "b.pgm", maxval);
    const auto bytes = fb::testing::read_bytes(dir / "b.pgm");
    const fb::Band back = fb::netpbm::read_pgm(dir / "b.pgm");
    fb::netpbm::write_pgm(back, dir / "c.pgm", maxval);
    o.check(back == b && fb::testing::read_bytes(dir / "c.pgm") == bytes, "PGM round trip");

    const fb::MultibandImage img({gen.integer_band(w, h, maxval), gen.integer_band(w, h, maxval),
                                  gen.integer_band(w, h, maxval)});
    fb::netpbm::write_ppm(img, dir / "i.ppm", maxval);
    const auto pbytes = fb::testing::read_bytes(dir / "i.ppm");
    const fb::MultibandImage pback = fb::netpbm::read_ppm(dir / "i.ppm");
    fb::netpbm::write_ppm(pback, dir / "j.ppm", maxval);
    o.check(pback == img && fb::testing::read_bytes(dir / "j.ppm") == pbytes, "PPM round trip");
  }

  // Hand-written big-endian byte oracle.
  std::string text = "P5\n3 1\n65535\n";
  const std::vector<std::uint8_t> payload{0x01, 0x00, 0x00, 0xFF, 0xAB, 0xCD};
  std::vector<std::uint8_t> bytes(text.begin(), text.end());
  bytes.insert(bytes.end(), payload.begin(), payload.end());
  const fb::Band b16 = fb::netpbm::decode_pgm(bytes);
  for (int x = 0; x < 3; ++x) {
    const double oracle = payload[2 * x] * 256.0 + payload[2 * x + 1];
    o.check(b16.at(x, 0) == oracle, "16-bit decode of sample " + std::to_string(x));
  }
  o.check(b16.at(0, 0) == 256.0, "0x01 0x00 != 256");
  o.check(fb::netpbm::encode_pgm(b16, 65535) == bytes, "16-bit re-encode");
  if (o.pass) o.detail = "48 round trips, 16-bit oracle";
  return o;
}

Outcome determinism(const fs::path& root) {
  Outcome o;
  const char* files[] = {"metrics.csv", "reference.ppm", "pan.pgm", "ms.ppm",
                         "fused_ef.ppm", "fused_pca.ppm", "fused_sf.ppm"};
  std::vector<std::string> thread_settings{"1", "4"};
  for (std::size_t i = 0; i < thread_settings.size(); ++i) {
    setenv("FUSEBENCH_THREADS", thread_settings[i].c_str(), 1);
    fb::cli::BenchArgs args;
    args.out_dir = root / ("det" + std::to_string(i));
    fb::cli::cmd_bench(args);
  }
  unsetenv("FUSEBENCH_THREADS");
  for (const char* f : files) {
    const auto a = fb::testing::read_bytes(root / "det0" / f);
    const auto b = fb::testing::read_bytes(root / "det1" / f);
    o.check(!a.empty() && a == b, std::string(f) + " differs between runs");
  }
  if (o.pass) o.detail = "FUSEBENCH_THREADS=1 vs 4, 7 files identical";
  return o;
}

}  // namespace

int main() {
  const fs::path root = fb::testing::scratch_dir("acceptance");

  struct Criterion {
    const char* name;
    double budget_seconds;  // 0 when no runtime bound applies
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"IHS round trip", 5.0, ihs_round_trip},
      {"PCA dual-route equality", 5.0, pca_dual_route},
      {"Eigen contract", 0.0, eigen_contract},
      {"Convolution oracle", 0.0, convolution_oracle},
      {"Metric identities", 0.0, metric_identities},
      {"SF fixed point", 0.0, sf_fixed_point},
      {"Chromaticity pass-through", 0.0, chromaticity_pass_through},
      {"Method ranking on built-in scene", 30.0, [&] { return method_ranking(root); }},
      {"File-format bit-exactness", 0.0, [&] { return file_format(root); }},
      {"Determinism across thread counts", 0.0, [&] { return determinism(root); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0.0 && secs >= c.budget_seconds) {
      o.pass = false;
      o.detail += " (over the " + fmt("%.0f", c.budget_seconds) + " s budget)";
    }
    std::printf("[%s] %2zu. %-34s %7.3f s  %s\n", o.pass ? "PASS" : "FAIL", i + 1, c.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
