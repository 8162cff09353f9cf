#pragma once

#include <vector>

#include "uncommon/grid.hpp"

namespace uncommon {

// Unnormalized 1-D Gaussian taps exp(-d^2 / 2 sigma^2) for d in [-r, r],
// r = ceil(3 sigma).
std::vector<double> gaussian_taps(double sigma);

// Separable Gaussian filter over the square support |dx|, |dy| <= ceil(3 sigma).
// The kernel is renormalized over the in-bounds support at every output
// pixel, so each output is a convex combination of inputs. sigma == 0 copies.
Grid<double> gaussian_filter(const Grid<double>& input, double sigma);

}  // namespace uncommon
