#include <benchmark/benchmark.h>

#include <random>

#include "fusebench/fusebench.hpp"

namespace fb = fusebench;

namespace {

fb::Band random_band(int w, int h, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 255.0);
  std::vector<double> s(static_cast<std::size_t>(w) * h);
  for (double& v : s) v = dist(rng);
  return fb::Band(w, h, std::move(s));
}

fb::MultibandImage random_rgb(int w, int h) {
  return fb::MultibandImage({random_band(w, h, 1), random_band(w, h, 2), random_band(w, h, 3)});
}

void BM_Convolve3(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const fb::Band b = random_band(n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(fb::convolve3(b, fb::Kernel3x3::box()));
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_Convolve3)->Arg(128)->Arg(600);

void BM_EigenSym3(benchmark::State& state) {
  const fb::Covariance3 cov = fb::covariance3(random_rgb(64, 64));
  for (auto _ : state) benchmark::DoNotOptimize(fb::eigen_sym3(cov));
}
BENCHMARK(BM_EigenSym3);

void BM_Fusion(benchmark::State& state) {
  const auto method = static_cast<fb::FusionMethod>(state.range(0));
  const fb::MultibandImage ms = random_rgb(600, 525);
  const fb::Band pan = random_band(600, 525, 9);
  fb::FusionConfig config;
  config.method = method;
  state.SetLabel(std::string(fb::to_string(method)));
  for (auto _ : state) benchmark::DoNotOptimize(fb::fuse(config, ms, pan));
}
BENCHMARK(BM_Fusion)
    ->Arg(static_cast<int>(fb::FusionMethod::kSegment))
    ->Arg(static_cast<int>(fb::FusionMethod::kPca))
    ->Arg(static_cast<int>(fb::FusionMethod::kEdge))
    ->Unit(benchmark::kMillisecond);

void BM_Assess(benchmark::State& state) {
  const fb::MultibandImage a = random_rgb(600, 525);
  const fb::MultibandImage b = random_rgb(600, 525);
  for (auto _ : state) benchmark::DoNotOptimize(fb::assess(a, b, "X"));
}
BENCHMARK(BM_Assess)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
