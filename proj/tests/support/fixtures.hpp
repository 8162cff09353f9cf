#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include "uncommon/grid.hpp"
#include "uncommon/raster.hpp"

namespace uncommon::testing {

// Synthetic "red bed": uniform red sandstone with one bleached 8x8 patch and
// one dark 4x4 concretion, plus i.i.d. Gaussian sample noise clamped to [0,1].
struct RedBed {
  static constexpr int kWidth = 192;
  static constexpr int kHeight = 144;
  static constexpr double kBackground[3] = {0.62, 0.24, 0.18};
  static constexpr int kWhiteX = 130;  // top-left corner
  static constexpr int kWhiteY = 40;
  static constexpr int kWhiteSize = 8;
  static constexpr double kWhite[3] = {0.95, 0.93, 0.90};
  static constexpr int kDarkX = 50;
  static constexpr int kDarkY = 100;
  static constexpr int kDarkSize = 4;
  static constexpr double kDark[3] = {0.25, 0.08, 0.07};
  static constexpr double kDefaultNoise = 0.01;

  static constexpr double white_center_x() { return kWhiteX + (kWhiteSize - 1) / 2.0; }
  static constexpr double white_center_y() { return kWhiteY + (kWhiteSize - 1) / 2.0; }
};

RasterImage make_red_bed(std::uint64_t seed, double noise_sigma = RedBed::kDefaultNoise);

RasterImage constant_image(int width, int height, double r, double g, double b);

// Horizontal mirror.
RasterImage flip_horizontal(const RasterImage& img);

// Rounds every sample to the nearest 8-bit level, as a file round trip would.
RasterImage quantize_to_8bit(const RasterImage& img);

Grid<int> random_int_grid(std::mt19937_64& rng, int width, int height, int lo, int hi);
Grid<double> random_real_grid(std::mt19937_64& rng, int width, int height, double lo, double hi);

// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace uncommon::testing
