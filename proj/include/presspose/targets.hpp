#pragma once

// Ground-truth confidence maps and part affinity fields, plus single-person
// peak decoding. Keypoints are given in the coordinates of the map being
// rendered; callers scale working-resolution labels first.

#include <Eigen/Core>

#include <array>
#include <cmath>

#include "presspose/skeleton.hpp"
#include "presspose/tensor.hpp"

namespace presspose::targets {

inline constexpr double kDefaultPeakThreshold = 0.10;

/// Default heatmap sigma and limb half-width: 2% of the working height.
inline double default_sigma(ImageSize size) { return 0.02 * size.height; }
inline double default_limb_width(ImageSize size) { return 0.02 * size.height; }

template <typename Scalar>
struct TargetMaps {
  FeatureMap<Scalar> heatmaps;  // 14 channels
  FeatureMap<Scalar> pafs;      // 28 channels
  VisibilityMask mask;          // false channels are all-zero and excluded from losses
};

template <typename Scalar>
FeatureMap<Scalar> render_heatmaps(const KeypointSet& ks, ImageSize size, double sigma) {
  if (!(sigma > 0.0)) throw ConfigError("heatmap sigma must be positive");
  FeatureMap<Scalar> maps(kPartCount, size.height, size.width);
  const double inv = 1.0 / (2.0 * sigma * sigma);
  for (int k = 0; k < kPartCount; ++k) {
    if (!ks.visible[k]) continue;
    const Eigen::Vector2d& p = ks.points[k];
    for (int y = 0; y < size.height; ++y) {
      const double dy = y - p.y();
      for (int x = 0; x < size.width; ++x) {
        const double dx = x - p.x();
        maps(k, y, x) = static_cast<Scalar>(std::exp(-(dx * dx + dy * dy) * inv));
      }
    }
  }
  return maps;
}

/// True when limb `l` has two visible, distinct endpoints.
inline bool limb_renderable(const KeypointSet& ks, const SkeletonTopology& topo, int l) {
  const auto [a, b] = topo.limbs[l];
  return ks.visible[a] && ks.visible[b] && (ks.points[b] - ks.points[a]).norm() > 0.0;
}

template <typename Scalar>
FeatureMap<Scalar> render_pafs(const KeypointSet& ks, const SkeletonTopology& topo, ImageSize size,
                               double limb_width) {
  if (!(limb_width > 0.0)) throw ConfigError("limb width must be positive");
  FeatureMap<Scalar> maps(kPafChannels, size.height, size.width);
  for (int l = 0; l < kLimbCount; ++l) {
    if (!limb_renderable(ks, topo, l)) continue;
    const Eigen::Vector2d p1 = ks.points[topo.limbs[l].first];
    const Eigen::Vector2d p2 = ks.points[topo.limbs[l].second];
    const Eigen::Vector2d d = p2 - p1;
    const double len2 = d.x() * d.x() + d.y() * d.y();
    const Eigen::Vector2d dir = d / std::sqrt(len2);
    // unnormalized tests, exact for integer coordinates
    const double reach2 = limb_width * limb_width * len2;
    for (int y = 0; y < size.height; ++y) {
      for (int x = 0; x < size.width; ++x) {
        const double vx = x - p1.x();
        const double vy = y - p1.y();
        const double along = vx * d.x() + vy * d.y();
        const double cross = vx * d.y() - vy * d.x();
        if (along >= 0.0 && along <= len2 && cross * cross <= reach2) {
          maps(2 * l, y, x) = static_cast<Scalar>(dir.x());
          maps(2 * l + 1, y, x) = static_cast<Scalar>(dir.y());
        }
      }
    }
  }
  return maps;
}

template <typename Scalar>
TargetMaps<Scalar> make_targets(const KeypointSet& ks, ImageSize size, double sigma, double limb_width,
                                const SkeletonTopology& topo = SkeletonTopology::standard()) {
  TargetMaps<Scalar> t;
  t.heatmaps = render_heatmaps<Scalar>(ks, size, sigma);
  t.pafs = render_pafs<Scalar>(ks, topo, size, limb_width);
  t.mask.parts = ks.visible;
  for (int l = 0; l < kLimbCount; ++l) t.mask.limbs[l] = limb_renderable(ks, topo, l);
  return t;
}

struct DecodedPose {
  KeypointSet keypoints;
  std::array<double, kPartCount> confidence{};
};

/// Per-channel argmax; ties go to the lowest row, then the lowest column.
/// A part is invisible when its peak is below `threshold`.
template <typename Scalar>
DecodedPose decode_keypoints(const FeatureMap<Scalar>& heatmaps, double threshold = kDefaultPeakThreshold) {
  if (heatmaps.channels() != kPartCount) throw ShapeError("decode_keypoints: expected 14 heatmap channels");
  DecodedPose out;
  for (int k = 0; k < kPartCount; ++k) {
    const Scalar* row = heatmaps.data.row(k).data();
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < heatmaps.pixels(); ++i)
      if (row[i] > row[best]) best = i;
    const Scalar peak = row[best];
    const int y = static_cast<int>(best / heatmaps.width);
    const int x = static_cast<int>(best % heatmaps.width);
    out.keypoints.points[k] = Eigen::Vector2d(x, y);
    out.confidence[k] = static_cast<double>(peak);
    out.keypoints.visible[k] = static_cast<double>(peak) >= threshold;
  }
  return out;
}

}  // namespace presspose::targets
