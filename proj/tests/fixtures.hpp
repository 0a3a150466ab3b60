#pragma once

// Colormap benchmark fixture: a probe adapter whose confidence for every part
// is R - 20 (G + B) at each pixel, and frames holding one pressure blob. Only
// a map that stays pure red and brightens with pressure puts every peak on
// the blob centre.

#include <memory>
#include <vector>

#include "presspose/colormap.hpp"
#include "presspose/dataset.hpp"
#include "presspose/pose_adapter.hpp"

namespace presspose::testkit {

inline std::unique_ptr<pose::StagedPoseNetwork<float>> probe_adapter() {
  pose::StagedNetworkSpec<float> s;
  s.name = "probe";
  s.input_offset = 0.0f;
  s.input_scale = 1.0f;
  pose::Op<float> heat;
  heat.name = "heatmaps";
  heat.conv = {1, Planes<float>(kPartCount, 3), Vector<float>::Zero(kPartCount)};
  heat.conv.weight.col(0).setConstant(1.0f);
  heat.conv.weight.col(1).setConstant(-20.0f);
  heat.conv.weight.col(2).setConstant(-20.0f);
  pose::Op<float> paf;
  paf.name = "pafs";
  paf.conv = {1, Planes<float>::Zero(kPafChannels, 3), Vector<float>::Zero(kPafChannels)};
  s.heatmap_branch.push_back({heat});
  s.paf_branch.push_back({paf});
  return std::make_unique<pose::StagedPoseNetwork<float>>(std::move(s));
}

inline data::Colormap red_ramp() {
  data::Colormap m;
  m.name = "red_ramp";
  m.lut.setZero();
  for (int i = 0; i < data::kLutSize; ++i) m.lut(i, 0) = static_cast<float>(i) / (data::kLutSize - 1);
  return m;
}

/// Built-in maps with red_ramp appended last.
inline std::vector<data::Colormap> benchmark_maps() {
  auto registry = data::ColormapRegistry::builtin();
  registry.add(red_ramp());
  return registry.all();
}

/// Grid-resolution frames (working size 64 x 32) with a 60 mmHg Gaussian
/// blob. Every part sits on the blob centre except the right hip, placed one
/// torso length (20 px) below it.
inline std::vector<data::LabeledFrame> blob_frames(int count) {
  std::vector<data::LabeledFrame> out;
  for (int i = 0; i < count; ++i) {
    const int cx = 10 + (i * 3) % 12;
    const int cy = 12 + (i * 5) % 20;
    data::LabeledFrame f;
    f.pressure.timestamp_index = i;
    for (int y = 0; y < data::kGridHeight; ++y)
      for (int x = 0; x < data::kGridWidth; ++x) {
        const double d2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
        f.pressure.values(y, x) = static_cast<float>(60.0 * std::exp(-d2 / (2.0 * 25.0)));
      }
    f.keypoints.frame = {1, 1, i};
    for (int k = 0; k < kPartCount; ++k) {
      f.keypoints.points[k] = Eigen::Vector2d(cx, cy);
      f.keypoints.visible[k] = true;
    }
    f.keypoints.points[index_of(Part::kRHip)] = Eigen::Vector2d(cx, cy + 20);
    out.push_back(f);
  }
  return out;
}

inline constexpr ImageSize kBlobWorkingSize{data::kGridHeight, data::kGridWidth};

}  // namespace presspose::testkit
