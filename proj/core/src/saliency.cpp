#include "uncommon/saliency.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

#include "uncommon/gaussian.hpp"

namespace uncommon {

UncommonMap uncommon_map(const SegmentationMap& seg, int max_classes) {
  if (max_classes < 1 || max_classes > kMaxUncommonClasses)
    throw ContractError("max_classes must be in [1, " + std::to_string(kMaxUncommonClasses) + "]");
  // Labels already rank classes by descending population, so the label is
  // the uncommonness. Classes past the cap are treated as noise.
  UncommonMap out{Grid<int>(seg.labels.width(), seg.labels.height(), 0)};
  auto dst = out.values.values();
  auto src = seg.labels.values();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const int label = src[i];
    if (label < 0 || label > seg.class_count()) throw ContractError("segmentation label outside its class range");
    dst[i] = label <= max_classes ? label : 0;
  }
  return out;
}

Grid<int> fuse_interest(const UncommonMap& hue, const UncommonMap& saturation, const UncommonMap& intensity) {
  if (!hue.values.same_shape(saturation.values) || !hue.values.same_shape(intensity.values))
    throw ContractError("uncommon maps differ in size");
  Grid<int> raw(hue.values.width(), hue.values.height());
  auto out = raw.values();
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = hue.values.values()[i] + saturation.values.values()[i] + intensity.values.values()[i];
  return raw;
}

Grid<double> blur_interest(const Grid<int>& raw, double blur_width) {
  if (!(blur_width >= 1.0)) throw ContractError("blur width must be at least 1 pixel");
  Grid<double> input(raw.width(), raw.height());
  std::transform(raw.values().begin(), raw.values().end(), input.values().begin(),
                 [](int v) { return static_cast<double>(v); });
  return gaussian_filter(input, blur_width / 2.0);
}

PointList extract_points(const Grid<double>& map, int k, double suppression_radius) {
  if (map.empty()) throw ContractError("cannot extract points from an empty map");
  if (k < 1) throw ContractError("k must be at least 1");
  if (suppression_radius < 0.0) throw ContractError("suppression radius must be non-negative");

  PointList result;
  const auto [lo, hi] = std::minmax_element(map.values().begin(), map.values().end());
  // A blurred constant map is only constant to rounding.
  result.degenerate = *hi - *lo <= 1e-12 * std::max(1.0, std::abs(*hi));

  Grid<char> excluded(map.width(), map.height(), 0);
  const double r2 = suppression_radius * suppression_radius;
  for (int round = 0; round < k; ++round) {
    int bx = -1;
    int by = -1;
    for (int y = 0; y < map.height(); ++y) {
      for (int x = 0; x < map.width(); ++x) {
        if (excluded(x, y)) continue;
        if (bx < 0 || map(x, y) > map(bx, by)) {
          bx = x;
          by = y;
        }
      }
    }
    if (bx < 0) break;
    result.points.push_back({bx, by, map(bx, by)});

    const int reach = static_cast<int>(std::ceil(suppression_radius));
    for (int y = std::max(0, by - reach); y <= std::min(map.height() - 1, by + reach); ++y) {
      for (int x = std::max(0, bx - reach); x <= std::min(map.width() - 1, bx + reach); ++x) {
        const double dx = x - bx;
        const double dy = y - by;
        if (dx * dx + dy * dy < r2) excluded(x, y) = 1;
      }
    }
    excluded(bx, by) = 1;
  }
  return result;
}

Analysis analyze(const RasterImage& img, const PipelineConfig& config) {
  config.validate();
  if (img.channels() != 3) throw ContractError("analyze expects a 3-channel image");
  if (img.empty()) throw ContractError("analyze expects a non-empty image");

  Analysis a;
  a.planes = rgb_to_hsi(img);

  const SegmentationParams params{config.quantization_bins, config.histogram_sigma, config.min_peak_fraction};
  const std::array<const RasterImage*, 3> planes = {&a.planes.hue, &a.planes.saturation, &a.planes.intensity};

  // Channels are independent; each future owns its result.
  std::array<std::future<SegmentationMap>, 3> pending;
  for (std::size_t c = 0; c < 3; ++c)
    pending[c] = std::async(std::launch::async, [&, c] { return segment_plane(*planes[c], params); });

  for (std::size_t c = 0; c < 3; ++c) {
    try {
      a.segmentations[c] = pending[c].get();
      a.uncommon[c] = uncommon_map(a.segmentations[c], config.max_classes);
    } catch (const DegenerateInputError& e) {
      a.segmentations[c] = SegmentationMap{Grid<int>(img.width(), img.height(), 0), {}};
      a.uncommon[c] = UncommonMap{Grid<int>(img.width(), img.height(), 0)};
      a.warnings.push_back(std::string(kChannelNames[c]) + ": " + e.what());
    }
  }

  a.interest.raw = fuse_interest(a.uncommon[0], a.uncommon[1], a.uncommon[2]);
  a.interest.blur_width = config.blur_width;
  a.interest.blurred = blur_interest(a.interest.raw, config.blur_width);

  Grid<double> raw_real(a.interest.raw.width(), a.interest.raw.height());
  std::transform(a.interest.raw.values().begin(), a.interest.raw.values().end(), raw_real.values().begin(),
                 [](int v) { return static_cast<double>(v); });

  a.points.suppression_radius = config.suppression_radius;
  a.points.blurred = extract_points(a.interest.blurred, config.top_k, config.suppression_radius);
  a.points.raw = extract_points(raw_real, config.top_k, config.suppression_radius);
  return a;
}

}  // namespace uncommon
