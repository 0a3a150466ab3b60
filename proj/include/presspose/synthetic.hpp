#pragma once

// Procedural pressure recordings with known keypoints, for tests, demos and
// toy training runs. A body is drawn as pressure ridges along the limbs and
// blobs at the joints; poses vary by subject and posture and jitter slightly
// from frame to frame.

#include <cstdint>
#include <random>
#include <vector>

#include "presspose/pressure.hpp"
#include "presspose/skeleton.hpp"
#include "presspose/tensor.hpp"

namespace presspose::data {

struct SyntheticOptions {
  int frames = 10;
  ImageSize working{};
  std::uint64_t seed = 0;
  double frame_jitter_px = 1.0;   // per-frame keypoint jitter, working pixels
  double noise_mmhg = 1.0;        // additive sensor noise
  double hidden_probability = 0;  // chance that a wrist or ankle is unlabeled
};

struct SyntheticSequence {
  PressureSequence sequence;
  std::vector<KeypointSet> keypoints;  // one per frame, working pixels
};

/// Base pose for a subject and posture, in working pixels.
KeypointSet synthetic_pose(int subject_id, int posture_id, ImageSize working);

/// Pressure image of a body in pose `ks` (working pixels).
PressureFrame render_pressure(const KeypointSet& ks, ImageSize working, std::mt19937_64* noise_rng = nullptr,
                              double noise_mmhg = 0.0);

SyntheticSequence make_synthetic_sequence(int subject_id, int posture_id, const SyntheticOptions& options);

}  // namespace presspose::data
