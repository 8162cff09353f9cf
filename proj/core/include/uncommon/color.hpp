#pragma once

#include "uncommon/raster.hpp"

namespace uncommon {

struct Hsi {
  double hue = 0.0;         // [0, 1), fraction of a full turn from the red axis
  double saturation = 0.0;  // [0, 1]
  double intensity = 0.0;   // [0, 1]
};

// Triangle-model HSI: I = mean, S = 1 - min / I, hue from the red axis.
// Hue is 0 by convention where the pixel is achromatic or black.
Hsi rgb_to_hsi(double r, double g, double b) noexcept;

struct HsiPlanes {
  RasterImage hue;
  RasterImage saturation;
  RasterImage intensity;
};

// Splits a 3-channel image into single-channel H, S and I planes.
HsiPlanes rgb_to_hsi(const RasterImage& img);

}  // namespace uncommon
