#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "presspose/pressure.hpp"
#include "presspose/tensor.hpp"

namespace presspose::data {

inline constexpr int kLutSize = 256;

struct Colormap {
  std::string name;
  Eigen::Matrix<float, kLutSize, 3, Eigen::RowMajor> lut;

  /// Color for t in [0,1], linearly interpolated between adjacent entries.
  Eigen::Vector3f sample(float t) const;
  void validate() const;
};

/// Named colormaps; starts with the built-in tables, viridis first.
class ColormapRegistry {
 public:
  static ColormapRegistry builtin();

  const Colormap& find(const std::string& name) const;
  bool contains(const std::string& name) const;
  /// Adds or replaces a map of the same name.
  void add(Colormap map);
  const std::vector<Colormap>& all() const { return maps_; }
  const Colormap& default_map() const { return find("viridis"); }

 private:
  std::vector<Colormap> maps_;
};

std::vector<Colormap> list_colormaps();
const Colormap& find_colormap(const std::string& name);

/// Colormap at grid resolution, before any resize: 3 x 64 x 32.
ColorImage colorize_grid(const PressureFrame& frame, const Colormap& map);

/// Normalizes over the fixed [0, 100] mmHg range, maps through the LUT and
/// resizes bicubically to `size`, clamping to [0,1].
ColorImage colorize(const PressureFrame& frame, const Colormap& map, ImageSize size = {});

/// Keys bicubic (a = -0.5) with half-pixel centers and edge replication.
ColorImage resize_bicubic(const ColorImage& in, ImageSize size);

}  // namespace presspose::data
