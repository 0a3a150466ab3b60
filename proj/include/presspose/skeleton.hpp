#pragma once

#include <Eigen/Core>

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace presspose {

inline constexpr int kPartCount = 14;
inline constexpr int kLimbCount = 14;
inline constexpr int kPafChannels = 2 * kLimbCount;

enum class Part : int {
  kHead,
  kNeck,
  kRShoulder,
  kRElbow,
  kRWrist,
  kLShoulder,
  kLElbow,
  kLWrist,
  kRHip,
  kRKnee,
  kRAnkle,
  kLHip,
  kLKnee,
  kLAnkle,
};

inline constexpr std::array<std::string_view, kPartCount> kPartNames = {
    "head",  "neck",  "r_shoulder", "r_elbow", "r_wrist", "l_shoulder", "l_elbow",
    "l_wrist", "r_hip", "r_knee",     "r_ankle", "l_hip",   "l_knee",     "l_ankle"};

inline constexpr int index_of(Part p) { return static_cast<int>(p); }
inline constexpr std::string_view part_name(int part) { return kPartNames[part]; }
std::optional<int> part_from_name(std::string_view name);

using Limb = std::pair<int, int>;

/// Parts and limbs in channel order; limb l owns PAF channels 2l (x) and 2l+1 (y).
struct SkeletonTopology {
  std::array<std::string_view, kPartCount> parts = kPartNames;
  std::array<Limb, kLimbCount> limbs;

  static const SkeletonTopology& standard();
};

/// Identifies one frame: subject, posture and timestamp index.
struct FrameRef {
  int subject_id = 1;
  int posture_id = 1;
  int timestamp_index = 0;

  auto operator<=>(const FrameRef&) const = default;
  bool same_sequence(const FrameRef& o) const { return subject_id == o.subject_id && posture_id == o.posture_id; }
};

/// 14 body-part locations in working-resolution pixels with visibility.
struct KeypointSet {
  std::array<Eigen::Vector2d, kPartCount> points{};
  std::array<bool, kPartCount> visible{};
  FrameRef frame;

  KeypointSet() { points.fill(Eigen::Vector2d::Zero()); }

  bool operator==(const KeypointSet& o) const;

  /// Returns the same set with every coordinate multiplied by `factor`.
  KeypointSet scaled(double factor) const;
};

struct VisibilityMask {
  std::array<bool, kPartCount> parts{};
  std::array<bool, kLimbCount> limbs{};
};

/// Part flags as stored; a limb is visible iff both endpoints are visible.
VisibilityMask visibility_mask(const KeypointSet& ks, const SkeletonTopology& topo = SkeletonTopology::standard());

}  // namespace presspose
