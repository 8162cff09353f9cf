#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "uncommon/grid.hpp"
#include "uncommon/raster.hpp"

namespace uncommon {

// Gray levels in [0, bins - 1].
using QuantizedPlane = Grid<int>;

// v -> min(floor(v * bins), bins - 1). `plane` must be single-channel.
QuantizedPlane quantize(const RasterImage& plane, int bins);

// Symmetric gray-level pair counts over 4-neighbour adjacencies.
struct CooccurrenceHistogram {
  int bins = 0;
  std::vector<std::uint64_t> counts;  // bins x bins, row-major
  std::uint64_t total_pairs = 0;

  std::uint64_t at(int row, int col) const noexcept {
    return counts[static_cast<std::size_t>(row) * static_cast<std::size_t>(bins) + static_cast<std::size_t>(col)];
  }
  Grid<double> as_grid() const;
};

CooccurrenceHistogram build_cooccurrence(const QuantizedPlane& quantized, int bins);

struct HistogramBin {
  int row = 0;
  int col = 0;
  friend bool operator==(const HistogramBin&, const HistogramBin&) = default;
};

struct HistogramPeaks {
  Grid<double> smoothed;            // x = col, y = row
  std::vector<HistogramBin> peaks;  // descending smoothed value
};

// Strict 8-neighbourhood maxima of the Gaussian-smoothed histogram whose
// smoothed value is at least min_fraction * total_pairs. Sorted by
// descending value, ties by (row, col). Throws DegenerateInputError when the
// histogram is empty.
HistogramPeaks find_histogram_peaks(const CooccurrenceHistogram& h, double smoothing_sigma, double min_fraction);

// Labels every histogram bin with the 1-based id of the peak reached by
// steepest ascent on the smoothed histogram, or 0 if the ascent stops at a
// local maximum that is not a retained peak.
Grid<int> assign_bins_to_peaks(const HistogramPeaks& peaks);

struct SegmentationMap {
  Grid<int> labels;                      // 1..K by descending population, 0 = noise
  std::vector<std::size_t> populations;  // populations[k - 1] for class k

  int class_count() const noexcept { return static_cast<int>(populations.size()); }
};

// Majority vote of adjacency-bin labels per pixel, then renumbering by
// descending population. Throws DegenerateInputError without peaks.
SegmentationMap classify_pixels(const QuantizedPlane& quantized, const HistogramPeaks& peaks);

struct SegmentationParams {
  int bins = 64;
  double smoothing_sigma = 1.0;
  double min_fraction = 0.0001;
};

// quantize -> build_cooccurrence -> find_histogram_peaks -> classify_pixels.
SegmentationMap segment_plane(const RasterImage& plane, const SegmentationParams& params);

}  // namespace uncommon
