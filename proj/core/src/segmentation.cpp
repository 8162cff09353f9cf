#include "uncommon/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "uncommon/gaussian.hpp"

namespace uncommon {

namespace {

constexpr int kNeighbours8[8][2] = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}};
constexpr int kNeighbours4[4][2] = {{0, -1}, {-1, 0}, {1, 0}, {0, 1}};

}  // namespace

QuantizedPlane quantize(const RasterImage& plane, int bins) {
  if (bins < 2) throw ContractError("quantization needs at least 2 bins");
  if (plane.channels() != 1) throw ContractError("quantize expects a single-channel plane");
  QuantizedPlane out(plane.width(), plane.height());
  for (int y = 0; y < plane.height(); ++y) {
    for (int x = 0; x < plane.width(); ++x) {
      const double v = std::max(plane.at(x, y), 0.0);
      out(x, y) = std::min(static_cast<int>(std::floor(v * bins)), bins - 1);
    }
  }
  return out;
}

Grid<double> CooccurrenceHistogram::as_grid() const {
  Grid<double> g(bins, bins);
  for (int r = 0; r < bins; ++r)
    for (int c = 0; c < bins; ++c) g(c, r) = static_cast<double>(at(r, c));
  return g;
}

CooccurrenceHistogram build_cooccurrence(const QuantizedPlane& quantized, int bins) {
  if (bins < 2) throw ContractError("co-occurrence histogram needs at least 2 bins");
  for (int v : quantized.values())
    if (v < 0 || v >= bins)
      throw ContractError("gray level " + std::to_string(v) + " outside [0, " + std::to_string(bins - 1) + "]");

  CooccurrenceHistogram h;
  h.bins = bins;
  h.counts.assign(static_cast<std::size_t>(bins) * static_cast<std::size_t>(bins), 0);
  const auto bump = [&](int a, int b) {
    ++h.counts[static_cast<std::size_t>(a) * static_cast<std::size_t>(bins) + static_cast<std::size_t>(b)];
    ++h.counts[static_cast<std::size_t>(b) * static_cast<std::size_t>(bins) + static_cast<std::size_t>(a)];
    h.total_pairs += 2;
  };
  for (int y = 0; y < quantized.height(); ++y) {
    for (int x = 0; x < quantized.width(); ++x) {
      if (x + 1 < quantized.width()) bump(quantized(x, y), quantized(x + 1, y));
      if (y + 1 < quantized.height()) bump(quantized(x, y), quantized(x, y + 1));
    }
  }
  return h;
}

HistogramPeaks find_histogram_peaks(const CooccurrenceHistogram& h, double smoothing_sigma, double min_fraction) {
  if (h.total_pairs == 0) throw DegenerateInputError("co-occurrence histogram is empty");
  if (smoothing_sigma < 0.0) throw ContractError("histogram smoothing sigma must be non-negative");

  HistogramPeaks result;
  result.smoothed = gaussian_filter(h.as_grid(), smoothing_sigma);
  // The separable passes sum transposed bins in different orders; average
  // with the transpose so symmetric bins compare exactly equal.
  Grid<double>& sm = result.smoothed;
  for (int r = 0; r < h.bins; ++r) {
    for (int c = r + 1; c < h.bins; ++c) {
      const double avg = (sm(c, r) + sm(r, c)) / 2.0;
      sm(c, r) = avg;
      sm(r, c) = avg;
    }
  }
  const Grid<double>& s = result.smoothed;
  const double threshold = min_fraction * static_cast<double>(h.total_pairs);

  for (int r = 0; r < h.bins; ++r) {
    for (int c = 0; c < h.bins; ++c) {
      const double v = s(c, r);
      if (v < threshold || v <= 0.0) continue;
      bool strict_max = true;
      for (const auto& d : kNeighbours8) {
        const int nc = c + d[0];
        const int nr = r + d[1];
        if (s.contains(nc, nr) && s(nc, nr) >= v) {
          strict_max = false;
          break;
        }
      }
      if (strict_max) result.peaks.push_back({r, c});
    }
  }
  // Row-major scan order already gives the (row, col) tie-break.
  std::stable_sort(result.peaks.begin(), result.peaks.end(), [&](const HistogramBin& a, const HistogramBin& b) {
    return s(a.col, a.row) > s(b.col, b.row);
  });
  return result;
}

Grid<int> assign_bins_to_peaks(const HistogramPeaks& peaks) {
  const Grid<double>& s = peaks.smoothed;
  const int n = s.width();
  Grid<int> peak_id(n, n, 0);
  for (std::size_t i = 0; i < peaks.peaks.size(); ++i)
    peak_id(peaks.peaks[i].col, peaks.peaks[i].row) = static_cast<int>(i) + 1;

  constexpr int kUnvisited = -1;
  Grid<int> labels(n, n, kUnvisited);
  std::vector<std::pair<int, int>> path;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (labels(c, r) != kUnvisited) continue;
      path.clear();
      int cr = r;
      int cc = c;
      int label = 0;
      while (true) {
        if (labels(cc, cr) != kUnvisited) {
          label = labels(cc, cr);
          break;
        }
        path.emplace_back(cc, cr);
        // Steepest ascent; the first neighbour in scan order wins equal maxima.
        double best = s(cc, cr);
        int br = -1;
        int bc = -1;
        for (const auto& d : kNeighbours8) {
          const int nc = cc + d[0];
          const int nr = cr + d[1];
          if (s.contains(nc, nr) && s(nc, nr) > best) {
            best = s(nc, nr);
            bc = nc;
            br = nr;
          }
        }
        if (br < 0) {
          label = peak_id(cc, cr);
          break;
        }
        cr = br;
        cc = bc;
      }
      for (const auto& [pc, pr] : path) labels(pc, pr) = label;
    }
  }
  return labels;
}

SegmentationMap classify_pixels(const QuantizedPlane& quantized, const HistogramPeaks& peaks) {
  if (peaks.peaks.empty()) throw DegenerateInputError("no histogram peaks to classify against");
  const int bins = peaks.smoothed.width();
  for (int v : quantized.values())
    if (v < 0 || v >= bins) throw ContractError("gray level outside the histogram range");

  const Grid<int> bin_labels = assign_bins_to_peaks(peaks);
  const int peak_count = static_cast<int>(peaks.peaks.size());

  Grid<int> provisional(quantized.width(), quantized.height(), 0);
  std::vector<int> votes(static_cast<std::size_t>(peak_count) + 1);
  for (int y = 0; y < quantized.height(); ++y) {
    for (int x = 0; x < quantized.width(); ++x) {
      std::fill(votes.begin(), votes.end(), 0);
      const int g = quantized(x, y);
      for (const auto& d : kNeighbours4) {
        const int nx = x + d[0];
        const int ny = y + d[1];
        if (!quantized.contains(nx, ny)) continue;
        ++votes[static_cast<std::size_t>(bin_labels(quantized(nx, ny), g))];
      }
      // Unassigned (label 0) votes only decide when nothing else was cast.
      int winner = 0;
      int best = 0;
      for (int label = 1; label <= peak_count; ++label) {
        if (votes[static_cast<std::size_t>(label)] > best) {
          best = votes[static_cast<std::size_t>(label)];
          winner = label;
        }
      }
      provisional(x, y) = winner;
    }
  }

  std::vector<std::size_t> counts(static_cast<std::size_t>(peak_count) + 1, 0);
  for (int v : provisional.values()) ++counts[static_cast<std::size_t>(v)];

  std::vector<int> order;
  for (int label = 1; label <= peak_count; ++label)
    if (counts[static_cast<std::size_t>(label)] > 0) order.push_back(label);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return counts[static_cast<std::size_t>(a)] > counts[static_cast<std::size_t>(b)];
  });

  std::vector<int> renumber(static_cast<std::size_t>(peak_count) + 1, 0);
  SegmentationMap seg;
  for (std::size_t i = 0; i < order.size(); ++i) {
    renumber[static_cast<std::size_t>(order[i])] = static_cast<int>(i) + 1;
    seg.populations.push_back(counts[static_cast<std::size_t>(order[i])]);
  }
  seg.labels = Grid<int>(quantized.width(), quantized.height());
  for (int y = 0; y < quantized.height(); ++y)
    for (int x = 0; x < quantized.width(); ++x) seg.labels(x, y) = renumber[static_cast<std::size_t>(provisional(x, y))];
  return seg;
}

SegmentationMap segment_plane(const RasterImage& plane, const SegmentationParams& params) {
  const QuantizedPlane q = quantize(plane, params.bins);
  const CooccurrenceHistogram h = build_cooccurrence(q, params.bins);
  const HistogramPeaks peaks = find_histogram_peaks(h, params.smoothing_sigma, params.min_fraction);
  return classify_pixels(q, peaks);
}

}  // namespace uncommon
