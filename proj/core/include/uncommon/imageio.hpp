#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "uncommon/grid.hpp"
#include "uncommon/raster.hpp"

namespace uncommon {

struct InterestPointSet;

// Reads a binary PPM (P6) or PNG file and returns a 3-channel image.
// Throws IoError when the file can't be read, FormatError otherwise.
RasterImage load_image(const std::filesystem::path& path);

// Decodes an in-memory PPM or PNG. `name` is only used in error messages.
RasterImage decode_image(std::span<const std::uint8_t> bytes, const std::filesystem::path& name);

// Writers quantize samples with round(s * 255). Single-channel images are
// written as grayscale PNG / PGM.
void save_ppm(const RasterImage& img, const std::filesystem::path& path);
void save_png(const RasterImage& img, const std::filesystem::path& path);
void save_pgm(const RasterImage& img, const std::filesystem::path& path);

// Picks the writer from the file extension (.ppm, .pgm, .png).
void save_image(const RasterImage& img, const std::filesystem::path& path);

// 16-bit binary PGM (P5, maxval 65535, big-endian samples).
void save_pgm16(const Grid<std::uint16_t>& values, const std::filesystem::path& path);

// Block-average downsampling by `downsample_factor` followed by a centered
// crop to crop_w x crop_h. Crop offsets are floor((dim - crop) / 2).
// Throws DimensionError if the downsampled image is smaller than the crop.
RasterImage preprocess(const RasterImage& img, int downsample_factor, int crop_w, int crop_h);

namespace overlay {
constexpr int kSquareSide = 11;
constexpr int kCircleRadius = 5;
constexpr double kMarkerColor[3] = {0.0, 1.0, 0.0};
}  // namespace overlay

// Pixel positions covered by each marker, clipped to a width x height frame.
std::vector<std::pair<int, int>> square_perimeter(int cx, int cy, int width, int height);
std::vector<std::pair<int, int>> circle_perimeter(int cx, int cy, int width, int height);

// Copy of `img` with blurred-scale points drawn as hollow squares and
// raw-scale points as hollow circles.
RasterImage render_overlay(const RasterImage& img, const InterestPointSet& points);

}  // namespace uncommon
