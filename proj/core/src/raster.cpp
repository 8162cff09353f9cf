#include "uncommon/raster.hpp"

#include <algorithm>

namespace uncommon {

RasterImage::RasterImage(int width, int height, int channels, double fill)
    : width_(width), height_(height), channels_(channels) {
  if (width < 0 || height < 0) throw ContractError("image dimensions must be non-negative");
  if (channels != 1 && channels != 3) throw ContractError("image must have 1 or 3 channels");
  if (!(fill >= 0.0 && fill <= 1.0)) throw ContractError("sample value outside [0, 1]");
  data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * static_cast<std::size_t>(channels),
               fill);
}

RasterImage RasterImage::from_plane(const Grid<double>& plane) {
  RasterImage img(plane.width(), plane.height(), 1);
  std::copy(plane.values().begin(), plane.values().end(), img.data_.begin());
  return img;
}

Grid<double> RasterImage::plane(int channel) const {
  if (channel < 0 || channel >= channels_) throw ContractError("channel index out of range");
  Grid<double> out(width_, height_);
  for (int y = 0; y < height_; ++y)
    for (int x = 0; x < width_; ++x) out(x, y) = at(x, y, channel);
  return out;
}

bool RasterImage::in_unit_range() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double s) { return s >= 0.0 && s <= 1.0; });
}

}  // namespace uncommon
