#include "presspose/png.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstring>

#include "presspose/errors.hpp"
#include "presspose/named_arrays.hpp"

namespace presspose::io {

namespace {

std::uint8_t to_byte(float v) { return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0f, 1.0f) * 255.0f)); }

std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& pixels, int width, int height, std::uint32_t format) {
  png_image img;
  std::memset(&img, 0, sizeof img);
  img.version = PNG_IMAGE_VERSION;
  img.width = static_cast<png_uint_32>(width);
  img.height = static_cast<png_uint_32>(height);
  img.format = format;
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&img, nullptr, &size, 0, pixels.data(), 0, nullptr)) {
    throw IOError(std::string("png encode: ") + img.message);
  }
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&img, out.data(), &size, 0, pixels.data(), 0, nullptr)) {
    throw IOError(std::string("png encode: ") + img.message);
  }
  out.resize(size);
  return out;
}

}  // namespace

std::vector<std::uint8_t> encode_png(const ColorImage& image) {
  if (image.channels() != 3) throw ShapeError("encode_png: expected 3 channels");
  std::vector<std::uint8_t> pixels(static_cast<std::size_t>(image.pixels()) * 3);
  for (int i = 0; i < image.pixels(); ++i)
    for (int c = 0; c < 3; ++c) pixels[3 * i + c] = to_byte(image.data(c, i));
  return encode(pixels, image.width, image.height, PNG_FORMAT_RGB);
}

std::vector<std::uint8_t> encode_png_gray(const FeatureMap<float>& map, int channel) {
  if (channel < 0 || channel >= map.channels()) throw ShapeError("encode_png_gray: channel out of range");
  std::vector<std::uint8_t> pixels(static_cast<std::size_t>(map.pixels()));
  for (int i = 0; i < map.pixels(); ++i) pixels[i] = to_byte(map.data(channel, i));
  return encode(pixels, map.width, map.height, PNG_FORMAT_GRAY);
}

ColorImage decode_png(const std::vector<std::uint8_t>& bytes) {
  png_image img;
  std::memset(&img, 0, sizeof img);
  img.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&img, bytes.data(), bytes.size())) {
    throw ParseError(std::string("png decode: ") + img.message);
  }
  img.format = PNG_FORMAT_RGB;
  std::vector<std::uint8_t> pixels(PNG_IMAGE_SIZE(img));
  if (!png_image_finish_read(&img, nullptr, pixels.data(), 0, nullptr)) {
    throw ParseError(std::string("png decode: ") + img.message);
  }
  ColorImage out(3, static_cast<int>(img.height), static_cast<int>(img.width));
  for (int i = 0; i < out.pixels(); ++i)
    for (int c = 0; c < 3; ++c) out.data(c, i) = pixels[3 * i + c] / 255.0f;
  return out;
}

void write_png(const std::filesystem::path& path, const ColorImage& image) { write_file_bytes(path, encode_png(image)); }

ColorImage read_png(const std::filesystem::path& path) { return decode_png(read_file_bytes(path)); }

}  // namespace presspose::io
