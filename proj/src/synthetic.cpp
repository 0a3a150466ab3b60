#include "presspose/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "presspose/errors.hpp"

namespace presspose::data {

namespace {

// Supine template: (across, along) as fractions of width and height.
constexpr std::array<std::array<double, 2>, kPartCount> kTemplate = {{
    {0.50, 0.08},  // head
    {0.50, 0.17},  // neck
    {0.32, 0.21},  // r_shoulder
    {0.26, 0.34},  // r_elbow
    {0.23, 0.47},  // r_wrist
    {0.68, 0.21},  // l_shoulder
    {0.74, 0.34},  // l_elbow
    {0.77, 0.47},  // l_wrist
    {0.41, 0.52},  // r_hip
    {0.40, 0.71},  // r_knee
    {0.39, 0.90},  // r_ankle
    {0.59, 0.52},  // l_hip
    {0.60, 0.71},  // l_knee
    {0.61, 0.90},  // l_ankle
}};

// Peak pressure per part, mmHg.
constexpr std::array<double, kPartCount> kPartLoad = {70, 30, 55, 35, 25, 55, 35, 25, 80, 40, 45, 80, 40, 45};

double segment_distance(const Eigen::Vector2d& p, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  const Eigen::Vector2d d = b - a;
  const double len2 = d.squaredNorm();
  const double t = len2 > 0.0 ? std::clamp((p - a).dot(d) / len2, 0.0, 1.0) : 0.0;
  return (p - (a + t * d)).norm();
}

void clamp_inside(KeypointSet& ks, ImageSize working) {
  for (auto& p : ks.points) {
    p.x() = std::clamp(p.x(), 1.0, working.width - 2.0);
    p.y() = std::clamp(p.y(), 1.0, working.height - 2.0);
  }
}

}  // namespace

KeypointSet synthetic_pose(int subject_id, int posture_id, ImageSize working) {
  std::mt19937_64 subject_rng(0x5eed0000ULL + static_cast<std::uint64_t>(subject_id));
  std::mt19937_64 posture_rng(0x9057ULL * 1000 + static_cast<std::uint64_t>(posture_id));
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  const double body_scale = 0.92 + 0.06 * unit(subject_rng);
  const double shift_x = 0.04 * unit(subject_rng);
  const double shift_y = 0.03 * unit(subject_rng);

  std::array<Eigen::Vector2d, kPartCount> p{};
  for (int k = 0; k < kPartCount; ++k) p[k] = {kTemplate[k][0], kTemplate[k][1]};
  // Posture: swing each arm and leg about its root joint.
  auto swing = [&](int root, std::initializer_list<int> chain, double max_angle) {
    const double angle = max_angle * unit(posture_rng);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    for (int k : chain) {
      // Aspect-correct rotation: work in pixel-proportional units.
      const double dx = (p[k].x() - p[root].x()) * working.width;
      const double dy = (p[k].y() - p[root].y()) * working.height;
      p[k].x() = p[root].x() + (c * dx - s * dy) / working.width;
      p[k].y() = p[root].y() + (s * dx + c * dy) / working.height;
    }
  };
  swing(index_of(Part::kRShoulder), {index_of(Part::kRElbow), index_of(Part::kRWrist)}, 0.6);
  swing(index_of(Part::kLShoulder), {index_of(Part::kLElbow), index_of(Part::kLWrist)}, 0.6);
  swing(index_of(Part::kRHip), {index_of(Part::kRKnee), index_of(Part::kRAnkle)}, 0.15);
  swing(index_of(Part::kLHip), {index_of(Part::kLKnee), index_of(Part::kLAnkle)}, 0.15);
  const double lean = 0.03 * unit(posture_rng);

  KeypointSet ks;
  for (int k = 0; k < kPartCount; ++k) {
    const double u = 0.5 + (p[k].x() - 0.5) * body_scale + shift_x + lean * (p[k].y() - 0.5);
    const double v = 0.5 + (p[k].y() - 0.5) * body_scale + shift_y;
    ks.points[k] = {u * working.width, v * working.height};
    ks.visible[k] = true;
  }
  ks.frame = {subject_id, posture_id, 0};
  clamp_inside(ks, working);
  return ks;
}

PressureFrame render_pressure(const KeypointSet& ks, ImageSize working, std::mt19937_64* noise_rng,
                              double noise_mmhg) {
  const auto& topo = SkeletonTopology::standard();
  const double sx = static_cast<double>(kGridWidth) / working.width;
  const double sy = static_cast<double>(kGridHeight) / working.height;
  // Keypoints in grid cell units (half-pixel centres on both grids).
  std::array<Eigen::Vector2d, kPartCount> g{};
  for (int k = 0; k < kPartCount; ++k) {
    g[k] = {(ks.points[k].x() + 0.5) * sx - 0.5, (ks.points[k].y() + 0.5) * sy - 0.5};
  }
  std::normal_distribution<double> noise(0.0, 1.0);
  PressureFrame frame;
  for (int y = 0; y < kGridHeight; ++y) {
    for (int x = 0; x < kGridWidth; ++x) {
      const Eigen::Vector2d c(x, y);
      double v = 0.0;
      for (int l = 0; l < kLimbCount; ++l) {
        const auto [a, b] = topo.limbs[l];
        const double d = segment_distance(c, g[a], g[b]);
        const double load = 0.5 * (kPartLoad[a] + kPartLoad[b]) * 0.6;
        v = std::max(v, load * std::exp(-d * d / (2.0 * 1.1 * 1.1)));
      }
      for (int k = 0; k < kPartCount; ++k) {
        const double d2 = (c - g[k]).squaredNorm();
        const double radius = k == index_of(Part::kHead) ? 2.2 : 1.4;
        v = std::max(v, kPartLoad[k] * std::exp(-d2 / (2.0 * radius * radius)));
      }
      if (noise_rng != nullptr && noise_mmhg > 0.0) v += noise_mmhg * noise(*noise_rng);
      frame.values(y, x) = static_cast<float>(std::clamp(v, 0.0, static_cast<double>(kMaxPressure)));
    }
  }
  return frame;
}

SyntheticSequence make_synthetic_sequence(int subject_id, int posture_id, const SyntheticOptions& options) {
  if (options.frames < 1) throw ConfigError("synthetic: need at least one frame");
  std::mt19937_64 rng(options.seed ^ (static_cast<std::uint64_t>(subject_id) << 32) ^
                      static_cast<std::uint64_t>(posture_id));
  std::normal_distribution<double> jitter(0.0, options.frame_jitter_px);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const KeypointSet base = synthetic_pose(subject_id, posture_id, options.working);

  SyntheticSequence out;
  out.sequence.meta = {subject_id, posture_id, 1.0};
  constexpr std::array<Part, 4> kHideable = {Part::kRWrist, Part::kLWrist, Part::kRAnkle, Part::kLAnkle};
  for (int t = 0; t < options.frames; ++t) {
    KeypointSet ks = base;
    ks.frame.timestamp_index = t;
    if (options.frame_jitter_px > 0.0) {
      const Eigen::Vector2d shift(jitter(rng), jitter(rng));
      for (auto& p : ks.points) p += shift;
    }
    clamp_inside(ks, options.working);
    PressureFrame frame = render_pressure(ks, options.working, &rng, options.noise_mmhg);
    frame.timestamp_index = t;
    for (Part part : kHideable)
      if (coin(rng) < options.hidden_probability) ks.visible[index_of(part)] = false;
    out.sequence.frames.push_back(std::move(frame));
    out.keypoints.push_back(ks);
  }
  return out;
}

}  // namespace presspose::data
