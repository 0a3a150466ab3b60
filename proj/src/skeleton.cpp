#include "presspose/skeleton.hpp"

#include <algorithm>

namespace presspose {

std::optional<int> part_from_name(std::string_view name) {
  auto it = std::find(kPartNames.begin(), kPartNames.end(), name);
  if (it == kPartNames.end()) return std::nullopt;
  return static_cast<int>(it - kPartNames.begin());
}

const SkeletonTopology& SkeletonTopology::standard() {
  static const SkeletonTopology topo = [] {
    using P = Part;
    auto l = [](P a, P b) { return Limb{index_of(a), index_of(b)}; };
    SkeletonTopology t;
    // 13 tree edges plus the pelvic cross-link.
    t.limbs = {l(P::kHead, P::kNeck),      l(P::kNeck, P::kRShoulder),  l(P::kRShoulder, P::kRElbow),
               l(P::kRElbow, P::kRWrist),  l(P::kNeck, P::kLShoulder),  l(P::kLShoulder, P::kLElbow),
               l(P::kLElbow, P::kLWrist),  l(P::kNeck, P::kRHip),       l(P::kRHip, P::kRKnee),
               l(P::kRKnee, P::kRAnkle),   l(P::kNeck, P::kLHip),       l(P::kLHip, P::kLKnee),
               l(P::kLKnee, P::kLAnkle),   l(P::kRHip, P::kLHip)};
    return t;
  }();
  return topo;
}

bool KeypointSet::operator==(const KeypointSet& o) const {
  return frame == o.frame && visible == o.visible && points == o.points;
}

KeypointSet KeypointSet::scaled(double factor) const {
  KeypointSet out = *this;
  for (auto& p : out.points) p *= factor;
  return out;
}

VisibilityMask visibility_mask(const KeypointSet& ks, const SkeletonTopology& topo) {
  VisibilityMask m;
  m.parts = ks.visible;
  for (int l = 0; l < kLimbCount; ++l) m.limbs[l] = ks.visible[topo.limbs[l].first] && ks.visible[topo.limbs[l].second];
  return m;
}

}  // namespace presspose
