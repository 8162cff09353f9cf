#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "uncommon/grid.hpp"

namespace uncommon {

// Interleaved image with 1 (scalar plane) or 3 (RGB) channels. Samples are
// unit-interval reals; 8-bit sources map through v / 255.
class RasterImage {
 public:
  RasterImage() = default;
  RasterImage(int width, int height, int channels, double fill = 0.0);

  static RasterImage from_plane(const Grid<double>& plane);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }
  bool empty() const noexcept { return data_.empty(); }

  double& at(int x, int y, int c = 0) noexcept { return data_[offset(x, y, c)]; }
  double at(int x, int y, int c = 0) const noexcept { return data_[offset(x, y, c)]; }

  std::span<double> samples() noexcept { return data_; }
  std::span<const double> samples() const noexcept { return data_; }

  // Copy of one channel as a grid.
  Grid<double> plane(int channel) const;

  // True when every sample lies in [0, 1].
  bool in_unit_range() const noexcept;

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::size_t offset(int x, int y, int c) const noexcept {
    return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x)) *
               static_cast<std::size_t>(channels_) +
           static_cast<std::size_t>(c);
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<double> data_;
};

}  // namespace uncommon
