#pragma once

#include <array>
#include <string>
#include <vector>

#include "uncommon/color.hpp"
#include "uncommon/config.hpp"
#include "uncommon/grid.hpp"
#include "uncommon/segmentation.hpp"

namespace uncommon {

// Per-pixel uncommonness: class k -> k for k <= max_classes, else 0.
struct UncommonMap {
  Grid<int> values;
  friend bool operator==(const UncommonMap&, const UncommonMap&) = default;
};

UncommonMap uncommon_map(const SegmentationMap& seg, int max_classes = kMaxUncommonClasses);

// Pointwise sum of the three channel maps.
Grid<int> fuse_interest(const UncommonMap& hue, const UncommonMap& saturation, const UncommonMap& intensity);

// Gaussian blur with sigma = blur_width / 2 (see gaussian_filter).
Grid<double> blur_interest(const Grid<int>& raw, double blur_width);

struct InterestMap {
  Grid<int> raw;
  Grid<double> blurred;
  double blur_width = 0.0;
};

struct InterestPoint {
  int x = 0;
  int y = 0;
  double score = 0.0;
  friend bool operator==(const InterestPoint&, const InterestPoint&) = default;
};

struct PointList {
  std::vector<InterestPoint> points;
  bool degenerate = false;  // the source map was constant
  friend bool operator==(const PointList&, const PointList&) = default;
};

// Greedy top-k: take the global maximum (ties: smallest row, then column),
// exclude everything closer than suppression_radius, repeat.
PointList extract_points(const Grid<double>& map, int k, double suppression_radius);

struct InterestPointSet {
  PointList blurred;  // reported to the operator
  PointList raw;      // 1-pixel scale, persisted only
  double suppression_radius = 0.0;
};

enum class Channel { kHue = 0, kSaturation = 1, kIntensity = 2 };
constexpr std::array<const char*, 3> kChannelNames = {"hue", "saturation", "intensity"};

struct Analysis {
  HsiPlanes planes;
  std::array<SegmentationMap, 3> segmentations;
  std::array<UncommonMap, 3> uncommon;
  InterestMap interest;
  InterestPointSet points;
  std::vector<std::string> warnings;
};

// Full pipeline on an already preprocessed RGB image. A channel whose
// segmentation is degenerate contributes an all-zero uncommon map and a
// warning instead of failing the run.
Analysis analyze(const RasterImage& img, const PipelineConfig& config);

}  // namespace uncommon
