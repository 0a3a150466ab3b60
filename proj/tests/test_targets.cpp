#include <gtest/gtest.h>

#include "oracles.hpp"
#include "presspose/targets.hpp"

using namespace presspose;
using namespace presspose::targets;

TEST(Targets, HeatmapsMatchOracle) {
  std::mt19937_64 rng(21);
  const ImageSize size{24, 16};
  for (int fixture = 0; fixture < 10; ++fixture) {
    const auto ks = testkit::random_keypoints(rng, size);
    const double sigma = 0.5 + fixture * 0.3;
    const auto maps = render_heatmaps<double>(ks, size, sigma);
    for (int k = 0; k < kPartCount; ++k)
      for (int y = 0; y < size.height; ++y)
        for (int x = 0; x < size.width; ++x) {
          const double want = ks.visible[k] ? testkit::gaussian_oracle(x, y, ks.points[k], sigma) : 0.0;
          ASSERT_NEAR(maps(k, y, x), want, 1e-12 * std::max(1.0, want));
        }
  }
}

TEST(Targets, PafsMatchOracle) {
  std::mt19937_64 rng(22);
  const ImageSize size{24, 16};
  const auto& topo = SkeletonTopology::standard();
  for (int fixture = 0; fixture < 10; ++fixture) {
    const auto ks = testkit::random_keypoints(rng, size);
    const double width = 0.5 + fixture * 0.4;
    const auto maps = render_pafs<double>(ks, topo, size, width);
    for (int l = 0; l < kLimbCount; ++l) {
      const auto [a, b] = topo.limbs[l];
      for (int y = 0; y < size.height; ++y)
        for (int x = 0; x < size.width; ++x) {
          Eigen::Vector2d want = Eigen::Vector2d::Zero();
          if (ks.visible[a] && ks.visible[b]) want = testkit::paf_oracle(x, y, ks.points[a], ks.points[b], width);
          ASSERT_NEAR(maps(2 * l, y, x), want.x(), 1e-12);
          ASSERT_NEAR(maps(2 * l + 1, y, x), want.y(), 1e-12);
        }
    }
  }
}

TEST(Targets, MaskFollowsVisibility) {
  KeypointSet ks;
  ks.visible.fill(true);
  for (int k = 0; k < kPartCount; ++k) ks.points[k] = Eigen::Vector2d(k, k);
  ks.visible[index_of(Part::kNeck)] = false;
  const auto t = make_targets<float>(ks, ImageSize{20, 20}, 1.0, 1.0);
  EXPECT_FALSE(t.mask.parts[index_of(Part::kNeck)]);
  EXPECT_FALSE(t.mask.limbs[0]);  // head-neck
  EXPECT_TRUE(t.mask.limbs[2]);   // r_shoulder-r_elbow
  EXPECT_EQ(t.heatmaps.data.row(index_of(Part::kNeck)).squaredNorm(), 0.0f);
  EXPECT_THROW(render_heatmaps<float>(ks, ImageSize{4, 4}, 0.0), ConfigError);
}

TEST(Targets, RenderDecodeRoundTrip) {
  std::mt19937_64 rng(23);
  const ImageSize size{40, 24};
  for (int fixture = 0; fixture < 50; ++fixture) {
    const auto ks = testkit::random_keypoints(rng, size, 0.7, true);
    const auto decoded = decode_keypoints(render_heatmaps<float>(ks, size, 2.0), 0.5);
    for (int k = 0; k < kPartCount; ++k) {
      ASSERT_EQ(decoded.keypoints.visible[k], ks.visible[k]);
      if (ks.visible[k]) ASSERT_EQ(decoded.keypoints.points[k], ks.points[k]);
    }
  }
}

TEST(Targets, DecodeTiesPreferLowestRowThenColumn) {
  FeatureMap<float> maps(kPartCount, 4, 4);
  maps(0, 2, 1) = 1.0f;
  maps(0, 1, 3) = 1.0f;
  maps(0, 1, 2) = 1.0f;
  const auto d = decode_keypoints(maps, 0.5);
  EXPECT_EQ(d.keypoints.points[0], Eigen::Vector2d(2, 1));
  EXPECT_DOUBLE_EQ(d.confidence[0], 1.0);
  EXPECT_FALSE(d.keypoints.visible[1]);
}
