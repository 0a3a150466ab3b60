#include <gtest/gtest.h>

#include "oracles.hpp"
#include "presspose/losses.hpp"

using namespace presspose;
using namespace presspose::train;

namespace {

FeatureMap<double> random_map(std::mt19937_64& rng, int c, int h, int w) {
  std::normal_distribution<double> n(0.0, 1.0);
  FeatureMap<double> m(c, h, w);
  for (Eigen::Index i = 0; i < m.data.size(); ++i) m.data.data()[i] = n(rng);
  return m;
}

std::array<bool, kPartCount> random_parts(std::mt19937_64& rng) {
  std::bernoulli_distribution b(0.7);
  std::array<bool, kPartCount> m{};
  for (auto& v : m) v = b(rng);
  return m;
}

}  // namespace

TEST(Losses, HeatmapLossMatchesOracle) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10; ++i) {
    const auto a = random_map(rng, kPartCount, 5, 4);
    const auto b = random_map(rng, kPartCount, 5, 4);
    const auto parts = random_parts(rng);
    const double want = testkit::sse_oracle(a, b, std::vector<bool>(parts.begin(), parts.end()));
    EXPECT_NEAR(heatmap_loss(a, b, parts), want, 1e-12 * want);
  }
}

TEST(Losses, PafLossMasksBothComponents) {
  std::mt19937_64 rng(32);
  const auto a = random_map(rng, kPafChannels, 3, 3);
  const auto b = random_map(rng, kPafChannels, 3, 3);
  std::array<bool, kLimbCount> limbs{};
  limbs[4] = true;
  std::vector<bool> mask(kPafChannels, false);
  mask[8] = mask[9] = true;
  EXPECT_NEAR(paf_loss(a, b, limbs), testkit::sse_oracle(a, b, mask), 1e-12);
}

TEST(Losses, PixelLossAndTotal) {
  std::mt19937_64 rng(33);
  const auto a = random_map(rng, 3, 4, 4);
  const auto b = random_map(rng, 3, 4, 4);
  const double want = testkit::sse_oracle(a, b, std::vector<bool>(3, true));
  EXPECT_NEAR(pixel_loss(a, b), want, 1e-12 * want);
  const LossParts parts{2.0, 3.0, 30000.0};
  EXPECT_DOUBLE_EQ(total_loss(parts, LossWeights{}), 6.0);
  EXPECT_THROW(total_loss({std::nan(""), 0, 0}, LossWeights{}), NumericalError);
}

TEST(Losses, MaskedChannelsHaveZeroGradient) {
  std::mt19937_64 rng(34);
  const auto a = random_map(rng, kPartCount, 3, 3);
  const auto b = random_map(rng, kPartCount, 3, 3);
  auto parts = random_parts(rng);
  parts[0] = false;
  const auto g = masked_sse_gradient(a, b, std::span<const bool>(parts), 1.5);
  EXPECT_EQ(g.data.row(0).squaredNorm(), 0.0);
  // d/dpred of w * sum (pred - gt)^2, by central differences
  for (int c = 0; c < kPartCount; ++c) {
    if (!parts[c]) continue;
    auto plus = a;
    auto minus = a;
    plus(c, 1, 2) += 1e-6;
    minus(c, 1, 2) -= 1e-6;
    const double fd = 1.5 * (heatmap_loss(plus, b, parts) - heatmap_loss(minus, b, parts)) / 2e-6;
    EXPECT_NEAR(g(c, 1, 2), fd, 1e-6);
  }
}

TEST(Losses, ShapeChecks) {
  FeatureMap<float> a(3, 2, 2);
  FeatureMap<float> b(3, 2, 3);
  EXPECT_THROW(pixel_loss(a, b), ShapeError);
  std::array<bool, kPartCount> parts{};
  EXPECT_THROW(heatmap_loss(a, a, parts), ShapeError);
  EXPECT_THROW(LossWeights({-1.0, 1.0, 1.0}).validate(), ConfigError);
}
