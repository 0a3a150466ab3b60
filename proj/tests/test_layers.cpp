#include <gtest/gtest.h>

#include "oracles.hpp"
#include "presspose/layers.hpp"

using namespace presspose;
using namespace presspose::nn;

namespace {

template <typename M>
void fill(M& m, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = n(rng);
}

FeatureMap<double> random_map(std::mt19937_64& rng, int c, int h, int w) {
  FeatureMap<double> m(c, h, w);
  fill(m.data, rng);
  return m;
}

}  // namespace

TEST(Layers, ConvMatchesOracle) {
  std::mt19937_64 rng(41);
  for (int k : {1, 3, 5}) {
    const auto in = random_map(rng, 3, 9, 7);
    ConvWeights<double> w{k, Planes<double>(4, 3 * k * k), Vector<double>(4)};
    fill(w.weight, rng);
    fill(w.bias, rng);
    const auto got = conv2d(in, w, 0);
    const auto want = testkit::conv_oracle(in, w.weight, w.bias, k);
    ASSERT_TRUE(got.same_shape(want));
    EXPECT_LT((got.data - want.data).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Layers, PaddedConvEqualsConvOfZeroPaddedInput) {
  std::mt19937_64 rng(42);
  const auto in = random_map(rng, 2, 5, 6);
  FeatureMap<double> padded(2, 7, 8);
  for (int c = 0; c < 2; ++c)
    for (int y = 0; y < 5; ++y)
      for (int x = 0; x < 6; ++x) padded(c, y + 1, x + 1) = in(c, y, x);
  ConvWeights<double> w{3, Planes<double>(3, 18), Vector<double>(3)};
  fill(w.weight, rng);
  fill(w.bias, rng);
  EXPECT_LT((conv2d(in, w, 1).data - conv2d(padded, w, 0).data).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Layers, DeconvMatchesOracleAndRestoresSize) {
  std::mt19937_64 rng(43);
  const auto in = random_map(rng, 4, 5, 3);
  ConvWeights<double> w{3, Planes<double>(4, 2 * 9), Vector<double>(2)};
  fill(w.weight, rng);
  fill(w.bias, rng);
  const auto got = deconv2d(in, w);
  const auto want = testkit::deconv_oracle(in, w.weight, w.bias, 3);
  ASSERT_EQ(got.height, 7);
  ASSERT_EQ(got.width, 5);
  EXPECT_LT((got.data - want.data).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Layers, Col2imIsAdjointOfIm2col) {
  std::mt19937_64 rng(44);
  const auto x = random_map(rng, 2, 6, 5);
  const auto cols = im2col(x, 3, 1);
  Planes<double> y(cols.rows(), cols.cols());
  fill(y, rng);
  const double lhs = (cols.array() * y.array()).sum();
  const double rhs = (x.data.array() * col2im(y, 2, 6, 5, 3, 1).data.array()).sum();
  EXPECT_NEAR(lhs, rhs, 1e-10 * std::abs(lhs));
}

TEST(Layers, BatchNormTrainNormalizesAndTracksRunningStats) {
  std::mt19937_64 rng(45);
  Batch<double> batch{random_map(rng, 3, 4, 4), random_map(rng, 3, 4, 4)};
  for (auto& m : batch) m.data.array() += 5.0;
  auto state = NormState<double>::identity(3);
  NormCache<double> cache;
  const auto out = batch_norm_train(batch, state, 1e-5, &cache);
  for (int c = 0; c < 3; ++c) {
    double mean = 0.0;
    double sq = 0.0;
    for (const auto& m : out) {
      mean += m.data.row(c).sum();
      sq += m.data.row(c).squaredNorm();
    }
    mean /= 32.0;
    EXPECT_NEAR(mean, 0.0, 1e-12);
    EXPECT_NEAR(sq / 32.0 - mean * mean, 1.0, 1e-3);
  }
  update_running_stats(state, cache, 0.99);
  for (int c = 0; c < 3; ++c) {
    EXPECT_NEAR(state.running_mean[c], 0.01 * cache.batch_mean[c], 1e-15);
    EXPECT_NEAR(state.running_var[c], 0.99 + 0.01 * cache.batch_var[c] * 32.0 / 31.0, 1e-15);
  }
}

TEST(Layers, BatchNormEvalUsesRunningStats) {
  auto state = NormState<double>::identity(1);
  state.running_mean[0] = 2.0;
  state.running_var[0] = 4.0 - 1e-5;
  state.scale[0] = 3.0;
  state.shift[0] = 1.0;
  FeatureMap<double> x(1, 1, 2);
  x(0, 0, 0) = 2.0;
  x(0, 0, 1) = 4.0;
  const auto y = batch_norm_eval(x, state, 1e-5);
  EXPECT_NEAR(y(0, 0, 0), 1.0, 1e-12);
  EXPECT_NEAR(y(0, 0, 1), 4.0, 1e-12);
}

TEST(Layers, PoolingForwardAndBackward) {
  FeatureMap<double> x(1, 2, 4);
  x.data << 1, 2, 3, 9, 4, 5, 6, 7;
  const auto a = avg_pool(x, 2);
  EXPECT_DOUBLE_EQ(a(0, 0, 0), 3.0);
  EXPECT_DOUBLE_EQ(a(0, 0, 1), 6.25);
  const auto m = max_pool(x, 2);
  EXPECT_DOUBLE_EQ(m(0, 0, 1), 9.0);
  FeatureMap<double> g(1, 1, 2);
  g.data << 4, 8;
  const auto ga = avg_pool_backward(x, g, 2);
  EXPECT_DOUBLE_EQ(ga(0, 1, 1), 1.0);
  const auto gm = max_pool_backward(x, g, 2);
  EXPECT_DOUBLE_EQ(gm(0, 0, 3), 8.0);
  EXPECT_DOUBLE_EQ(gm(0, 1, 0), 0.0);
  EXPECT_DOUBLE_EQ(gm(0, 1, 1), 4.0);
}

TEST(Layers, ActivationGradients) {
  FeatureMap<double> x(1, 1, 3);
  x.data << -2.0, 0.5, 3.0;
  const auto g = leaky_relu_backward(x, sigmoid(x), 0.1);
  EXPECT_NEAR(g(0, 0, 0), 0.1 / (1.0 + std::exp(2.0)), 1e-15);
  const auto s = sigmoid(x);
  FeatureMap<double> ones(1, 1, 3);
  ones.data.setOnes();
  const auto gs = sigmoid_backward(s, ones);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(gs.data(0, i), s.data(0, i) * (1 - s.data(0, i)), 1e-15);
}
