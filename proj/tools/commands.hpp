#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "fusebench/error.hpp"
#include "fusebench/metrics.hpp"
#include "fusebench/pipeline.hpp"

namespace fusebench::cli {

// Failure inside a subcommand; stage() names the step that failed.
class CommandError : public Error {
 public:
  CommandError(std::string stage, const std::string& detail)
      : Error(stage + ": " + detail), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

struct DegradeArgs {
  std::filesystem::path ref;
  int factor = 5;
  std::filesystem::path out_pan;
  std::filesystem::path out_ms;
};

struct FuseArgs {
  FusionMethod method = FusionMethod::kSegment;
  std::filesystem::path pan;
  std::filesystem::path ms;
  int factor = 1;
  std::filesystem::path out;
  EdgeOperator edge_operator = EdgeOperator::kLaplacian;
  bool standardized = false;
};

struct AssessArgs {
  std::filesystem::path fused;
  std::filesystem::path reference;
  std::string label;
  std::filesystem::path out;
};

struct BenchArgs {
  std::optional<std::filesystem::path> ref;  // built-in scene when empty
  int factor = 5;
  std::filesystem::path out_dir;
};

struct BenchResult {
  MetricsReport report;
  std::filesystem::path csv;
};

void cmd_degrade(const DegradeArgs& args);
FusionSummary cmd_fuse(const FuseArgs& args);
// Appends to args.out when it already exists with the same header.
MetricsReport cmd_assess(const AssessArgs& args);
BenchResult cmd_bench(const BenchArgs& args);

// Parses argv and runs one subcommand. Returns the process exit status and
// prints a single-line diagnostic to stderr on failure.
int run(int argc, char** argv);

}  // namespace fusebench::cli
