#include "uncommon/gaussian.hpp"

#include <cmath>

namespace uncommon {

std::vector<double> gaussian_taps(double sigma) {
  if (!(sigma > 0.0)) throw ContractError("gaussian sigma must be positive");
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> taps(static_cast<std::size_t>(2 * radius + 1));
  for (int d = -radius; d <= radius; ++d)
    taps[static_cast<std::size_t>(d + radius)] = std::exp(-(d * d) / (2.0 * sigma * sigma));
  return taps;
}

namespace {

// One separable pass along x (horizontal = true) or y. Each output is the
// in-bounds weighted sum divided by the in-bounds weight total.
Grid<double> filter_pass(const Grid<double>& in, const std::vector<double>& taps, bool horizontal) {
  const int radius = static_cast<int>(taps.size() / 2);
  const int w = in.width();
  const int h = in.height();
  Grid<double> out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      double norm = 0.0;
      for (int d = -radius; d <= radius; ++d) {
        const int sx = horizontal ? x + d : x;
        const int sy = horizontal ? y : y + d;
        if (!in.contains(sx, sy)) continue;
        const double t = taps[static_cast<std::size_t>(d + radius)];
        acc += t * in(sx, sy);
        norm += t;
      }
      out(x, y) = acc / norm;
    }
  }
  return out;
}

}  // namespace

Grid<double> gaussian_filter(const Grid<double>& input, double sigma) {
  if (sigma < 0.0) throw ContractError("gaussian sigma must be non-negative");
  if (sigma == 0.0 || input.empty()) return input;
  const auto taps = gaussian_taps(sigma);
  return filter_pass(filter_pass(input, taps, true), taps, false);
}

}  // namespace uncommon
