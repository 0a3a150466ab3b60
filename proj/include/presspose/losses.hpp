#pragma once

// Unnormalized sum-of-squares objectives. Masked channels contribute zero
// loss and zero gradient.

#include <array>
#include <cmath>
#include <span>

#include "presspose/errors.hpp"
#include "presspose/skeleton.hpp"
#include "presspose/tensor.hpp"

namespace presspose::train {

struct LossWeights {
  double heatmap = 1.0;
  double paf = 1.0;
  double pixel = 1.0 / 30000.0;

  void validate() const {
    if (!(heatmap >= 0.0) || !(paf >= 0.0) || !(pixel >= 0.0)) throw ConfigError("loss weights must be non-negative");
  }
};

struct LossParts {
  double heatmap = 0.0;
  double paf = 0.0;
  double pixel = 0.0;

  LossParts& operator+=(const LossParts& o) {
    heatmap += o.heatmap;
    paf += o.paf;
    pixel += o.pixel;
    return *this;
  }
};

/// Sum over channels c with mask[c] of squared differences.
template <typename Scalar>
Scalar masked_sse(const FeatureMap<Scalar>& pred, const FeatureMap<Scalar>& gt, std::span<const bool> channel_mask) {
  require_same_shape(pred, gt, "loss");
  if (static_cast<int>(channel_mask.size()) != pred.channels()) throw ShapeError("loss: mask length mismatch");
  Scalar sum = 0;
  for (int c = 0; c < pred.channels(); ++c)
    if (channel_mask[c]) sum += (pred.data.row(c) - gt.data.row(c)).squaredNorm();
  return sum;
}

template <typename Scalar>
FeatureMap<Scalar> masked_sse_gradient(const FeatureMap<Scalar>& pred, const FeatureMap<Scalar>& gt,
                                       std::span<const bool> channel_mask, Scalar weight) {
  FeatureMap<Scalar> g(pred.channels(), pred.height, pred.width);
  for (int c = 0; c < pred.channels(); ++c)
    if (channel_mask[c]) g.data.row(c) = (2 * weight) * (pred.data.row(c) - gt.data.row(c));
  return g;
}

inline std::array<bool, kPafChannels> paf_channel_mask(const std::array<bool, kLimbCount>& limbs) {
  std::array<bool, kPafChannels> m{};
  for (int l = 0; l < kLimbCount; ++l) m[2 * l] = m[2 * l + 1] = limbs[l];
  return m;
}

template <typename Scalar>
Scalar heatmap_loss(const FeatureMap<Scalar>& pred, const FeatureMap<Scalar>& gt, const std::array<bool, kPartCount>& parts) {
  if (pred.channels() != kPartCount) throw ShapeError("heatmap_loss: expected 14 channels");
  return masked_sse(pred, gt, std::span<const bool>(parts));
}

template <typename Scalar>
Scalar paf_loss(const FeatureMap<Scalar>& pred, const FeatureMap<Scalar>& gt, const std::array<bool, kLimbCount>& limbs) {
  if (pred.channels() != kPafChannels) throw ShapeError("paf_loss: expected 28 channels");
  const auto mask = paf_channel_mask(limbs);
  return masked_sse(pred, gt, std::span<const bool>(mask));
}

template <typename Scalar>
Scalar pixel_loss(const FeatureMap<Scalar>& input, const FeatureMap<Scalar>& polished) {
  require_same_shape(input, polished, "pixel_loss");
  return (input.data - polished.data).squaredNorm();
}

inline double total_loss(const LossParts& parts, const LossWeights& w) {
  if (!std::isfinite(parts.heatmap) || !std::isfinite(parts.paf) || !std::isfinite(parts.pixel)) {
    throw NumericalError("total_loss: non-finite loss term");
  }
  return w.heatmap * parts.heatmap + w.paf * parts.paf + w.pixel * parts.pixel;
}

}  // namespace presspose::train
