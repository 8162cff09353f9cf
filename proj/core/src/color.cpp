#include "uncommon/color.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace uncommon {

Hsi rgb_to_hsi(double r, double g, double b) noexcept {
  Hsi out;
  out.intensity = (r + g + b) / 3.0;
  const double lo = std::min({r, g, b});
  const double hi = std::max({r, g, b});
  if (out.intensity <= 0.0 || hi == lo) return out;

  out.saturation = std::clamp(1.0 - lo / out.intensity, 0.0, 1.0);
  if (out.saturation == 0.0) return out;

  // Same angle as acos(((r-g)+(r-b)) / (2 sqrt((r-g)^2 + (r-b)(g-b)))),
  // mirrored to 2pi - theta when b > g.
  double angle = std::atan2(std::numbers::sqrt3 * (g - b), 2.0 * r - g - b);
  if (angle < 0.0) angle += 2.0 * std::numbers::pi;
  double hue = angle / (2.0 * std::numbers::pi);
  if (hue >= 1.0) hue = 0.0;
  out.hue = hue;
  return out;
}

HsiPlanes rgb_to_hsi(const RasterImage& img) {
  if (img.channels() != 3) throw ContractError("rgb_to_hsi requires a 3-channel image");
  HsiPlanes planes{RasterImage(img.width(), img.height(), 1), RasterImage(img.width(), img.height(), 1),
                   RasterImage(img.width(), img.height(), 1)};
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const Hsi p = rgb_to_hsi(img.at(x, y, 0), img.at(x, y, 1), img.at(x, y, 2));
      planes.hue.at(x, y) = p.hue;
      planes.saturation.at(x, y) = p.saturation;
      planes.intensity.at(x, y) = std::min(p.intensity, 1.0);
    }
  }
  return planes;
}

}  // namespace uncommon
