#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fusebench/netpbm.hpp"
#include "fusebench/raster.hpp"
#include "fusebench/synthetic.hpp"

namespace fusebench::cli {

namespace {

template <typename Fn>
auto staged(const std::string& stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const CommandError&) {
    throw;
  } catch (const std::exception& e) {
    throw CommandError(stage, e.what());
  }
}

std::string read_first_line(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

void write_text(const std::filesystem::path& path, const std::string& text, bool append) {
  std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

void cmd_degrade(const DegradeArgs& args) {
  const MultibandImage ref = staged("degrade/read", [&] { return netpbm::read_ppm(args.ref); });
  const DegradedPair pair = staged("degrade", [&] { return degrade(ref, args.factor); });
  staged("degrade/write", [&] {
    netpbm::write_pgm(pair.pan, args.out_pan, ref.source_maxval());
    netpbm::write_ppm(pair.ms, args.out_ms, ref.source_maxval());
  });
}

FusionSummary cmd_fuse(const FuseArgs& args) {
  FusionConfig config;
  config.method = args.method;
  config.edge_operator = args.edge_operator;
  config.pca_standardized = args.standardized;
  config.upsample_factor = args.factor;
  return staged("fuse/" + std::string(to_string(args.method)),
                [&] { return run_fusion(config, args.ms, args.pan, args.out); });
}

MetricsReport cmd_assess(const AssessArgs& args) {
  if (args.label.find_first_of(",\n\r") != std::string::npos) {
    throw CommandError("assess", "label must not contain commas or line breaks");
  }
  const MultibandImage fused = staged("assess/read", [&] { return netpbm::read_ppm(args.fused); });
  const MultibandImage reference =
      staged("assess/read", [&] { return netpbm::read_ppm(args.reference); });
  MetricsReport report = staged("assess", [&] { return assess(fused, reference, args.label); });

  staged("assess/write", [&] {
    const bool exists = std::filesystem::exists(args.out) && std::filesystem::file_size(args.out) > 0;
    if (exists) {
      const std::string header = read_first_line(args.out);
      if (header != kCsvHeader) {
        throw ParameterError("existing CSV " + args.out.string() + " has header '" + header +
                             "', expected '" + std::string(kCsvHeader) + "'");
      }
      write_text(args.out, to_csv_rows(report), true);
    } else {
      write_text(args.out, to_csv(report), false);
    }
  });
  return report;
}

BenchResult cmd_bench(const BenchArgs& args) {
  namespace fs = std::filesystem;
  staged("bench/setup", [&] { fs::create_directories(args.out_dir); });

  fs::path ref_path;
  if (args.ref) {
    ref_path = *args.ref;
  } else {
    ref_path = args.out_dir / "reference.ppm";
    staged("bench/scene", [&] { netpbm::write_ppm(synthetic_scene(), ref_path, 255); });
  }

  const fs::path pan_path = args.out_dir / "pan.pgm";
  const fs::path ms_path = args.out_dir / "ms.ppm";
  cmd_degrade({ref_path, args.factor, pan_path, ms_path});

  const MultibandImage reference =
      staged("bench/read", [&] { return netpbm::read_ppm(ref_path); });
  const MultibandImage baseline = staged("bench/upsample", [&] {
    return upsample_nearest(netpbm::read_ppm(ms_path), args.factor);
  });

  BenchResult result;
  result.report = staged("bench/assess", [&] { return assess(baseline, reference, "ORIGIN"); });

  struct Run {
    FusionMethod method;
    const char* file;
  };
  for (const Run& run : {Run{FusionMethod::kEdge, "fused_ef.ppm"},
                         Run{FusionMethod::kPca, "fused_pca.ppm"},
                         Run{FusionMethod::kSegment, "fused_sf.ppm"}}) {
    FuseArgs fa;
    fa.method = run.method;
    fa.pan = pan_path;
    fa.ms = ms_path;
    fa.factor = args.factor;
    fa.out = args.out_dir / run.file;
    cmd_fuse(fa);
    const std::string label(to_string(run.method));
    const MultibandImage fused =
        staged("bench/read", [&] { return netpbm::read_ppm(fa.out); });
    result.report.append(
        staged("bench/assess/" + label, [&] { return assess(fused, reference, label); }));
  }

  result.csv = args.out_dir / "metrics.csv";
  staged("bench/write", [&] { write_text(result.csv, to_csv(result.report), false); });
  return result;
}

int run(int argc, char** argv) {
  CLI::App app{"Pan-sharpening fusion and quality assessment toolkit"};
  app.require_subcommand(1);

  DegradeArgs degrade_args;
  auto* degrade = app.add_subcommand("degrade", "Make a PAN/MS pair from an RGB reference");
  degrade->add_option("--ref", degrade_args.ref, "Reference RGB image (PPM)")->required();
  degrade->add_option("--factor", degrade_args.factor, "Downsampling factor")
      ->required()
      ->check(CLI::PositiveNumber);
  degrade->add_option("--out-pan", degrade_args.out_pan, "Output PAN (PGM)")->required();
  degrade->add_option("--out-ms", degrade_args.out_ms, "Output MS (PPM)")->required();

  FuseArgs fuse_args;
  std::string method_text;
  std::string edge_text = "laplacian";
  auto* fuse = app.add_subcommand("fuse", "Fuse an MS image with a PAN band");
  fuse->add_option("--method", method_text, "sf | pca | ef")
      ->required()
      ->check(CLI::IsMember({"sf", "pca", "ef"}));
  fuse->add_option("--pan", fuse_args.pan, "PAN band (PGM)")->required();
  fuse->add_option("--ms", fuse_args.ms, "MS image (PPM)")->required();
  fuse->add_option("--factor", fuse_args.factor, "MS upsampling factor")
      ->required()
      ->check(CLI::PositiveNumber);
  fuse->add_option("--out", fuse_args.out, "Fused output (PPM)")->required();
  fuse->add_option("--edge-op", edge_text, "sobel | laplacian | sum_of_both")
      ->check(CLI::IsMember({"sobel", "laplacian", "sum_of_both"}));
  fuse->add_flag("--standardized", fuse_args.standardized,
                 "PCA basis from the correlation matrix");

  AssessArgs assess_args;
  auto* assess_cmd = app.add_subcommand("assess", "Compute quality metrics against a reference");
  assess_cmd->add_option("--fused", assess_args.fused, "Fused image (PPM)")->required();
  assess_cmd->add_option("--reference", assess_args.reference, "Reference image (PPM)")
      ->required();
  assess_cmd->add_option("--label", assess_args.label, "Method label")->required();
  assess_cmd->add_option("--out", assess_args.out, "Metrics CSV (appended)")->required();

  BenchArgs bench_args;
  std::string bench_ref;
  auto* bench = app.add_subcommand("bench", "Degrade, fuse with every method, and assess");
  bench->add_option("--ref", bench_ref, "Reference RGB image (default: built-in scene)");
  bench->add_option("--factor", bench_args.factor, "Resolution ratio")
      ->check(CLI::PositiveNumber);
  bench->add_option("--out-dir", bench_args.out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    std::cerr << "fusebench: arguments: " << msg << "\n";
    return 2;
  }

  try {
    if (*degrade) {
      cmd_degrade(degrade_args);
    } else if (*fuse) {
      fuse_args.method = *parse_method(method_text);
      fuse_args.edge_operator = *parse_edge_operator(edge_text);
      const FusionSummary s = cmd_fuse(fuse_args);
      std::cout << to_string(s.method) << " " << s.ms_width << "x" << s.ms_height << " -> "
                << s.width << "x" << s.height << " in " << s.seconds << " s\n";
    } else if (*assess_cmd) {
      cmd_assess(assess_args);
    } else if (*bench) {
      if (!bench_ref.empty()) bench_args.ref = bench_ref;
      const BenchResult r = cmd_bench(bench_args);
      std::cout << to_csv(r.report);
    }
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    std::cerr << "fusebench: " << msg << "\n";
    return 1;
  }
  return 0;
}

}  // namespace fusebench::cli
