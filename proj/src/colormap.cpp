#include "presspose/colormap.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "colormap_tables.hpp"
#include "presspose/errors.hpp"

namespace presspose::data {

namespace {

float cubic_weight(float d) {
  constexpr float a = -0.5f;
  d = std::abs(d);
  if (d <= 1.0f) return ((a + 2.0f) * d - (a + 3.0f)) * d * d + 1.0f;
  if (d < 2.0f) return ((a * d - 5.0f * a) * d + 8.0f * a) * d - 4.0f * a;
  return 0.0f;
}

struct Taps {
  std::vector<std::array<int, 4>> index;
  std::vector<std::array<float, 4>> weight;
};

Taps make_taps(int in_len, int out_len) {
  Taps taps;
  taps.index.resize(out_len);
  taps.weight.resize(out_len);
  const float scale = static_cast<float>(in_len) / static_cast<float>(out_len);
  for (int o = 0; o < out_len; ++o) {
    const float src = (static_cast<float>(o) + 0.5f) * scale - 0.5f;
    const int base = static_cast<int>(std::floor(src));
    const float frac = src - static_cast<float>(base);
    for (int k = 0; k < 4; ++k) {
      taps.index[o][k] = std::clamp(base - 1 + k, 0, in_len - 1);
      taps.weight[o][k] = cubic_weight(frac - static_cast<float>(k - 1));
    }
  }
  return taps;
}

}  // namespace

Eigen::Vector3f Colormap::sample(float t) const {
  const float pos = std::clamp(t, 0.0f, 1.0f) * static_cast<float>(kLutSize - 1);
  const int i = std::min(static_cast<int>(pos), kLutSize - 2);
  const float frac = pos - static_cast<float>(i);
  return (lut.row(i) + frac * (lut.row(i + 1) - lut.row(i))).transpose();
}

void Colormap::validate() const {
  if (!lut.allFinite() || lut.minCoeff() < 0.0f || lut.maxCoeff() > 1.0f) {
    throw ValidationError("colormap " + name + ": entries must lie in [0,1]");
  }
}

ColormapRegistry ColormapRegistry::builtin() {
  ColormapRegistry reg;
  for (const auto& table : detail::kBuiltinLuts) {
    Colormap m;
    m.name = std::string(table.name);
    for (int i = 0; i < kLutSize; ++i)
      for (int c = 0; c < 3; ++c) m.lut(i, c) = table.rgb[i][c];
    reg.maps_.push_back(std::move(m));
  }
  return reg;
}

const Colormap& ColormapRegistry::find(const std::string& name) const {
  auto it = std::find_if(maps_.begin(), maps_.end(), [&](const Colormap& m) { return m.name == name; });
  if (it == maps_.end()) throw UnknownColormapError(name);
  return *it;
}

bool ColormapRegistry::contains(const std::string& name) const {
  return std::any_of(maps_.begin(), maps_.end(), [&](const Colormap& m) { return m.name == name; });
}

void ColormapRegistry::add(Colormap map) {
  map.validate();
  auto it = std::find_if(maps_.begin(), maps_.end(), [&](const Colormap& m) { return m.name == map.name; });
  if (it != maps_.end()) {
    *it = std::move(map);
  } else {
    maps_.push_back(std::move(map));
  }
}

std::vector<Colormap> list_colormaps() { return ColormapRegistry::builtin().all(); }

const Colormap& find_colormap(const std::string& name) {
  static const ColormapRegistry registry = ColormapRegistry::builtin();
  return registry.find(name);
}

ColorImage colorize_grid(const PressureFrame& frame, const Colormap& map) {
  ColorImage img(3, kGridHeight, kGridWidth);
  for (int y = 0; y < kGridHeight; ++y) {
    for (int x = 0; x < kGridWidth; ++x) {
      const Eigen::Vector3f rgb = map.sample(frame.values(y, x) / kMaxPressure);
      for (int c = 0; c < 3; ++c) img(c, y, x) = rgb[c];
    }
  }
  return img;
}

ColorImage resize_bicubic(const ColorImage& in, ImageSize size) {
  if (size.height == in.height && size.width == in.width) return in;
  const Taps tx = make_taps(in.width, size.width);
  const Taps ty = make_taps(in.height, size.height);
  ColorImage out(in.channels(), size.height, size.width);
  std::vector<float> row_pass(static_cast<std::size_t>(in.height) * size.width);
  for (int c = 0; c < in.channels(); ++c) {
    for (int y = 0; y < in.height; ++y)
      for (int x = 0; x < size.width; ++x) {
        float s = 0.0f;
        for (int k = 0; k < 4; ++k) s += tx.weight[x][k] * in(c, y, tx.index[x][k]);
        row_pass[static_cast<std::size_t>(y) * size.width + x] = s;
      }
    for (int y = 0; y < size.height; ++y)
      for (int x = 0; x < size.width; ++x) {
        float s = 0.0f;
        for (int k = 0; k < 4; ++k) s += ty.weight[y][k] * row_pass[static_cast<std::size_t>(ty.index[y][k]) * size.width + x];
        out(c, y, x) = std::clamp(s, 0.0f, 1.0f);
      }
  }
  return out;
}

ColorImage colorize(const PressureFrame& frame, const Colormap& map, ImageSize size) {
  return resize_bicubic(colorize_grid(frame, map), size);
}

}  // namespace presspose::data
