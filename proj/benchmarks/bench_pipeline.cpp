#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "uncommon/saliency.hpp"
#include "uncommon/segmentation.hpp"

namespace {

using namespace uncommon;

// Reddish field with a pale square, at the default analysis frame size.
RasterImage scene(int width, int height) {
  RasterImage img(width, height, 3);
  std::mt19937_64 rng(42);
  std::normal_distribution<double> noise(0.0, 0.01);
  const double base[3] = {0.62, 0.24, 0.18};
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      const bool patch = x >= width * 2 / 3 && x < width * 2 / 3 + 8 && y >= height / 4 && y < height / 4 + 8;
      for (int c = 0; c < 3; ++c) img.at(x, y, c) = std::clamp((patch ? 0.93 : base[c]) + noise(rng), 0.0, 1.0);
    }
  return img;
}

void BM_Analyze(benchmark::State& state) {
  const RasterImage img = scene(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const PipelineConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(analyze(img, config));
}
BENCHMARK(BM_Analyze)->Args({192, 144})->Args({384, 288})->Unit(benchmark::kMillisecond);

void BM_BlurInterest(benchmark::State& state) {
  Grid<int> raw(192, 144);
  std::mt19937_64 rng(7);
  for (int& v : raw.values()) v = static_cast<int>(rng() % 25);
  for (auto _ : state) benchmark::DoNotOptimize(blur_interest(raw, static_cast<double>(state.range(0))));
}
BENCHMARK(BM_BlurInterest)->Arg(4)->Arg(10)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_Cooccurrence(benchmark::State& state) {
  const auto bins = static_cast<int>(state.range(0));
  const QuantizedPlane q = quantize(RasterImage::from_plane(scene(192, 144).plane(0)), bins);
  for (auto _ : state) benchmark::DoNotOptimize(build_cooccurrence(q, bins));
}
BENCHMARK(BM_Cooccurrence)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_SegmentPlane(benchmark::State& state) {
  const RasterImage plane = RasterImage::from_plane(scene(192, 144).plane(2));
  for (auto _ : state) benchmark::DoNotOptimize(segment_plane(plane, {}));
}
BENCHMARK(BM_SegmentPlane)->Unit(benchmark::kMillisecond);

void BM_ExtractPoints(benchmark::State& state) {
  const Grid<double> map = blur_interest(Grid<int>(192, 144, 3), 10.0);
  for (auto _ : state) benchmark::DoNotOptimize(extract_points(map, static_cast<int>(state.range(0)), 10.0));
}
BENCHMARK(BM_ExtractPoints)->Arg(3)->Arg(10)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
