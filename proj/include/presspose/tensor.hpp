#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <string>
#include <vector>

#include "presspose/errors.hpp"

namespace presspose {

/// Channel-planar storage: one row per channel, pixels row-major along the
/// columns (index y * width + x).
template <typename Scalar>
using Planes = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// A C x H x W activation volume.
template <typename Scalar>
struct FeatureMap {
  int height = 0;
  int width = 0;
  Planes<Scalar> data;

  FeatureMap() = default;
  FeatureMap(int channels, int h, int w) : height(h), width(w), data(Planes<Scalar>::Zero(channels, h * w)) {}

  int channels() const { return static_cast<int>(data.rows()); }
  int pixels() const { return height * width; }

  Scalar& operator()(int c, int y, int x) { return data(c, y * width + x); }
  Scalar operator()(int c, int y, int x) const { return data(c, y * width + x); }

  bool same_shape(const FeatureMap& other) const {
    return height == other.height && width == other.width && channels() == other.channels();
  }

  template <typename To>
  FeatureMap<To> cast() const {
    FeatureMap<To> out;
    out.height = height;
    out.width = width;
    out.data = data.template cast<To>();
    return out;
  }
};

template <typename Scalar>
using Batch = std::vector<FeatureMap<Scalar>>;

struct ImageSize {
  int height = 256;
  int width = 128;

  friend bool operator==(const ImageSize&, const ImageSize&) = default;
};

/// Colorized or polished image: 3 channels with values in [0,1].
using ColorImage = FeatureMap<float>;

inline std::string shape_string(int c, int h, int w) {
  return std::to_string(c) + "x" + std::to_string(h) + "x" + std::to_string(w);
}

template <typename Scalar>
std::string shape_string(const FeatureMap<Scalar>& m) {
  return shape_string(m.channels(), m.height, m.width);
}

template <typename Scalar>
void require_same_shape(const FeatureMap<Scalar>& a, const FeatureMap<Scalar>& b, const char* what) {
  if (!a.same_shape(b)) {
    throw ShapeError(std::string(what) + ": shape " + shape_string(a) + " vs " + shape_string(b));
  }
}

}  // namespace presspose
