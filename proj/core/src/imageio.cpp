#include "uncommon/imageio.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <set>
#include <string>

#include "uncommon/errors.hpp"
#include "uncommon/saliency.hpp"

namespace uncommon {

namespace fs = std::filesystem;

namespace {

constexpr std::array<std::uint8_t, 8> kPngSignature = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};

std::uint8_t to_byte(double s) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(s, 0.0, 1.0) * 255.0));
}

std::string lower_extension(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext;
}

// Netpbm header token reader; skips whitespace and '#' comments.
class PnmHeader {
 public:
  PnmHeader(std::span<const std::uint8_t> bytes, const fs::path& name) : bytes_(bytes), name_(name) {}

  unsigned long next_number() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) throw FormatError(name_.string(), "malformed PPM header");
    unsigned long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + static_cast<unsigned long>(bytes_[pos_] - '0');
      if (value > 1u << 20) throw FormatError(name_.string(), "PPM header value too large");
      ++pos_;
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_offset() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) throw FormatError(name_.string(), "malformed PPM header");
    return pos_ + 1;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  const fs::path& name_;
  std::size_t pos_ = 2;
};

RasterImage decode_ppm(std::span<const std::uint8_t> bytes, const fs::path& name) {
  PnmHeader header(bytes, name);
  const auto width = header.next_number();
  const auto height = header.next_number();
  const auto maxval = header.next_number();
  const std::size_t offset = header.raster_offset();
  if (width == 0 || height == 0) throw FormatError(name.string(), "PPM has zero dimension");
  if (maxval == 0 || maxval > 65535) throw FormatError(name.string(), "PPM maxval out of range");

  const std::size_t sample_bytes = maxval > 255 ? 2 : 1;
  const std::size_t count = width * height * 3;
  if (bytes.size() - offset < count * sample_bytes) throw FormatError(name.string(), "PPM raster truncated");

  RasterImage img(static_cast<int>(width), static_cast<int>(height), 3);
  auto out = img.samples();
  const double scale = static_cast<double>(maxval);
  for (std::size_t i = 0; i < count; ++i) {
    unsigned v = bytes[offset + i * sample_bytes];
    if (sample_bytes == 2) v = (v << 8) | bytes[offset + i * 2 + 1];
    if (v > maxval) throw FormatError(name.string(), "PPM sample exceeds maxval");
    out[i] = static_cast<double>(v) / scale;
  }
  return img;
}

RasterImage decode_png(std::span<const std::uint8_t> bytes, const fs::path& name) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    std::string msg = image.message;
    png_image_free(&image);
    throw FormatError(name.string(), "invalid PNG (" + msg + ")");
  }
  image.format = PNG_FORMAT_RGB;
  std::vector<std::uint8_t> buffer(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
    std::string msg = image.message;
    png_image_free(&image);
    throw FormatError(name.string(), "corrupt PNG (" + msg + ")");
  }
  RasterImage img(static_cast<int>(image.width), static_cast<int>(image.height), 3);
  std::transform(buffer.begin(), buffer.end(), img.samples().begin(),
                 [](std::uint8_t v) { return static_cast<double>(v) / 255.0; });
  return img;
}

void write_file(const fs::path& path, const std::string& header, const std::vector<std::uint8_t>& payload) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  out.write(reinterpret_cast<const char*>(payload.data()), static_cast<std::streamsize>(payload.size()));
  if (!out) throw IoError(path.string(), "write failed");
}

std::vector<std::uint8_t> to_bytes(const RasterImage& img) {
  std::vector<std::uint8_t> bytes(img.samples().size());
  std::transform(img.samples().begin(), img.samples().end(), bytes.begin(), to_byte);
  return bytes;
}

}  // namespace

RasterImage decode_image(std::span<const std::uint8_t> bytes, const fs::path& name) {
  if (bytes.size() >= kPngSignature.size() && std::equal(kPngSignature.begin(), kPngSignature.end(), bytes.begin()))
    return decode_png(bytes, name);
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6') return decode_ppm(bytes, name);
  if (bytes.empty()) throw FormatError(name.string(), "empty file");
  throw FormatError(name.string(), "unsupported image format");
}

RasterImage load_image(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw IoError(path.string(), "cannot read image file");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open image file");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError(path.string(), "read failed");
  return decode_image(bytes, path);
}

void save_ppm(const RasterImage& img, const fs::path& path) {
  if (img.channels() != 3) throw ContractError("PPM output requires a 3-channel image");
  write_file(path, "P6\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n",
             to_bytes(img));
}

void save_pgm(const RasterImage& img, const fs::path& path) {
  if (img.channels() != 1) throw ContractError("PGM output requires a single-channel image");
  write_file(path, "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n",
             to_bytes(img));
}

void save_pgm16(const Grid<std::uint16_t>& values, const fs::path& path) {
  std::vector<std::uint8_t> payload;
  payload.reserve(values.size() * 2);
  for (std::uint16_t v : values.values()) {
    payload.push_back(static_cast<std::uint8_t>(v >> 8));
    payload.push_back(static_cast<std::uint8_t>(v & 0xFF));
  }
  write_file(path, "P5\n" + std::to_string(values.width()) + " " + std::to_string(values.height()) + "\n65535\n",
             payload);
}

void save_png(const RasterImage& img, const fs::path& path) {
  if (img.empty()) throw ContractError("cannot write an empty image");
  const auto bytes = to_bytes(img);
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width());
  image.height = static_cast<png_uint_32>(img.height());
  image.format = img.channels() == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  if (!png_image_write_to_file(&image, path.c_str(), 0, bytes.data(), 0, nullptr)) {
    std::string msg = image.message;
    png_image_free(&image);
    throw IoError(path.string(), "PNG write failed (" + msg + ")");
  }
}

void save_image(const RasterImage& img, const fs::path& path) {
  const auto ext = lower_extension(path);
  if (ext == ".png") return save_png(img, path);
  if (ext == ".ppm") return save_ppm(img, path);
  if (ext == ".pgm") return save_pgm(img, path);
  throw FormatError(path.string(), "unsupported output extension");
}

RasterImage preprocess(const RasterImage& img, int downsample_factor, int crop_w, int crop_h) {
  if (downsample_factor < 1) throw ContractError("downsample factor must be positive");
  if (crop_w < 1 || crop_h < 1) throw ContractError("crop size must be positive");
  const int f = downsample_factor;
  const int dw = img.width() / f;
  const int dh = img.height() / f;
  if (dw < crop_w || dh < crop_h)
    throw DimensionError("image " + std::to_string(img.width()) + "x" + std::to_string(img.height()) +
                         " is smaller than " + std::to_string(crop_w) + "x" + std::to_string(crop_h) +
                         " after downsampling by " + std::to_string(f));

  const int x0 = (dw - crop_w) / 2;
  const int y0 = (dh - crop_h) / 2;
  const double block = static_cast<double>(f) * f;
  RasterImage out(crop_w, crop_h, img.channels());
  for (int y = 0; y < crop_h; ++y) {
    for (int x = 0; x < crop_w; ++x) {
      const int sx = (x0 + x) * f;
      const int sy = (y0 + y) * f;
      for (int c = 0; c < img.channels(); ++c) {
        // Mean taken relative to the first sample so constant blocks stay exact.
        const double first = img.at(sx, sy, c);
        double delta = 0.0;
        for (int by = 0; by < f; ++by)
          for (int bx = 0; bx < f; ++bx) delta += img.at(sx + bx, sy + by, c) - first;
        out.at(x, y, c) = std::clamp(first + delta / block, 0.0, 1.0);
      }
    }
  }
  return out;
}

std::vector<std::pair<int, int>> square_perimeter(int cx, int cy, int width, int height) {
  constexpr int half = overlay::kSquareSide / 2;
  std::set<std::pair<int, int>> pixels;
  for (int d = -half; d <= half; ++d) {
    pixels.insert({cx + d, cy - half});
    pixels.insert({cx + d, cy + half});
    pixels.insert({cx - half, cy + d});
    pixels.insert({cx + half, cy + d});
  }
  std::vector<std::pair<int, int>> out;
  for (const auto& [x, y] : pixels)
    if (x >= 0 && y >= 0 && x < width && y < height) out.emplace_back(x, y);
  return out;
}

std::vector<std::pair<int, int>> circle_perimeter(int cx, int cy, int width, int height) {
  // Midpoint circle rasterization.
  std::set<std::pair<int, int>> pixels;
  int x = overlay::kCircleRadius;
  int y = 0;
  int err = 1 - x;
  while (x >= y) {
    for (const auto& [dx, dy] : {std::pair{x, y}, {y, x}, {-y, x}, {-x, y}, {-x, -y}, {-y, -x}, {y, -x}, {x, -y}})
      pixels.insert({cx + dx, cy + dy});
    ++y;
    if (err < 0) {
      err += 2 * y + 1;
    } else {
      --x;
      err += 2 * (y - x) + 1;
    }
  }
  std::vector<std::pair<int, int>> out;
  for (const auto& [px, py] : pixels)
    if (px >= 0 && py >= 0 && px < width && py < height) out.emplace_back(px, py);
  return out;
}

RasterImage render_overlay(const RasterImage& img, const InterestPointSet& points) {
  if (img.channels() != 3) throw ContractError("overlay requires a 3-channel image");
  const auto check = [&](const InterestPoint& p) {
    if (p.x < 0 || p.y < 0 || p.x >= img.width() || p.y >= img.height())
      throw ContractError("interest point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                          ") outside the image");
  };
  for (const auto& p : points.blurred.points) check(p);
  for (const auto& p : points.raw.points) check(p);

  RasterImage out = img;
  const auto paint = [&](const std::vector<std::pair<int, int>>& pixels) {
    for (const auto& [x, y] : pixels)
      for (int c = 0; c < 3; ++c) out.at(x, y, c) = overlay::kMarkerColor[c];
  };
  for (const auto& p : points.blurred.points) paint(square_perimeter(p.x, p.y, img.width(), img.height()));
  for (const auto& p : points.raw.points) paint(circle_perimeter(p.x, p.y, img.width(), img.height()));
  return out;
}

}  // namespace uncommon
