#include "fixtures.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>

namespace uncommon::testing {

RasterImage make_red_bed(std::uint64_t seed, double noise_sigma) {
  RasterImage img(RedBed::kWidth, RedBed::kHeight, 3);
  const auto fill = [&](int x0, int y0, int size_x, int size_y, const double* rgb) {
    for (int y = y0; y < y0 + size_y; ++y)
      for (int x = x0; x < x0 + size_x; ++x)
        for (int c = 0; c < 3; ++c) img.at(x, y, c) = rgb[c];
  };
  fill(0, 0, RedBed::kWidth, RedBed::kHeight, RedBed::kBackground);
  fill(RedBed::kWhiteX, RedBed::kWhiteY, RedBed::kWhiteSize, RedBed::kWhiteSize, RedBed::kWhite);
  fill(RedBed::kDarkX, RedBed::kDarkY, RedBed::kDarkSize, RedBed::kDarkSize, RedBed::kDark);
  if (noise_sigma > 0.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, noise_sigma);
    for (double& s : img.samples()) s = std::clamp(s + noise(rng), 0.0, 1.0);
  }
  return img;
}

RasterImage constant_image(int width, int height, double r, double g, double b) {
  RasterImage img(width, height, 3);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      img.at(x, y, 0) = r;
      img.at(x, y, 1) = g;
      img.at(x, y, 2) = b;
    }
  }
  return img;
}

RasterImage flip_horizontal(const RasterImage& img) {
  RasterImage out(img.width(), img.height(), img.channels());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      for (int c = 0; c < img.channels(); ++c) out.at(img.width() - 1 - x, y, c) = img.at(x, y, c);
  return out;
}

RasterImage quantize_to_8bit(const RasterImage& img) {
  RasterImage out = img;
  for (double& s : out.samples()) s = static_cast<double>(std::lround(s * 255.0)) / 255.0;
  return out;
}

Grid<int> random_int_grid(std::mt19937_64& rng, int width, int height, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Grid<int> g(width, height);
  for (int& v : g.values()) v = dist(rng);
  return g;
}

Grid<double> random_real_grid(std::mt19937_64& rng, int width, int height, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Grid<double> g(width, height);
  for (double& v : g.values()) v = dist(rng);
  return g;
}

TempDir::TempDir(const std::string& tag) {
  static std::atomic<int> counter{0};
  std::random_device rd;
  path_ = std::filesystem::temp_directory_path() /
          ("uncommon-" + tag + "-" + std::to_string(rd()) + "-" + std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace uncommon::testing
