#pragma once

// 8-bit PNG encoding and decoding of color images and single planes.

#include <Eigen/Core>

#include <cstdint>
#include <filesystem>
#include <vector>

#include "presspose/tensor.hpp"

namespace presspose::io {

/// RGB8, values in [0,1] scaled by 255 and rounded.
std::vector<std::uint8_t> encode_png(const ColorImage& image);
/// Grayscale plane of `map` channel `channel`, values in [0,1] scaled by 255.
std::vector<std::uint8_t> encode_png_gray(const FeatureMap<float>& map, int channel);

/// Any PNG, converted to RGB and scaled to [0,1].
ColorImage decode_png(const std::vector<std::uint8_t>& bytes);

void write_png(const std::filesystem::path& path, const ColorImage& image);
ColorImage read_png(const std::filesystem::path& path);

}  // namespace presspose::io
