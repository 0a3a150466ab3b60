#include <gtest/gtest.h>

#include <set>

#include "gradcheck.hpp"
#include "oracles.hpp"
#include "presspose/experiments.hpp"

using namespace presspose;
using namespace presspose::train;

namespace {

TrainConfig tiny_config(int iterations) {
  TrainConfig c;
  c.max_iterations = iterations;
  c.batch_size = 2;
  c.seed = 4;
  return c;
}

std::vector<Sample> tiny_samples() { return testkit::synthetic_samples({28, 28}, 2, 2); }

}  // namespace

TEST(Training, LearningRateSchedule) {
  const TrainConfig c;
  EXPECT_DOUBLE_EQ(learning_rate_at(c, 0), 1e-4);
  EXPECT_DOUBLE_EQ(learning_rate_at(c, 99), 1e-4);
  EXPECT_NEAR(learning_rate_at(c, 100), 9.5e-5, 1e-18);
  EXPECT_NEAR(learning_rate_at(c, 250), 9.025e-5, 1e-18);
}

TEST(Training, AdamMatchesScalarRecurrence) {
  Vector<double> theta(3);
  theta << 1.0, -2.0, 0.5;
  Adam<double> adam(3, 0.9, 0.999, 1e-8);
  std::array<double, 3> t{1.0, -2.0, 0.5};
  std::array<double, 3> m{};
  std::array<double, 3> v{};
  std::mt19937_64 rng(71);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int step = 1; step <= 5; ++step) {
    Vector<double> g(3);
    for (int i = 0; i < 3; ++i) g[i] = n(rng);
    adam.step(theta, g, 0.01);
    for (int i = 0; i < 3; ++i) {
      m[i] = 0.9 * m[i] + 0.1 * g[i];
      v[i] = 0.999 * v[i] + 0.001 * g[i] * g[i];
      const double mh = m[i] / (1 - std::pow(0.9, step));
      const double vh = v[i] / (1 - std::pow(0.999, step));
      t[i] -= 0.01 * mh / (std::sqrt(vh) + 1e-8);
    }
  }
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(theta[i], t[i], 1e-12);
  EXPECT_EQ(adam.steps(), 5);
}

TEST(Training, BatchSamplerCoversEpochsAndStraddles) {
  BatchSampler a(10, 4, 3);
  BatchSampler b(10, 4, 3);
  std::vector<std::size_t> drawn;
  for (int i = 0; i < 5; ++i) {
    const auto batch = a.next();
    EXPECT_EQ(batch, b.next());
    ASSERT_EQ(batch.size(), 4u);
    drawn.insert(drawn.end(), batch.begin(), batch.end());
  }
  // 20 draws are exactly two permutations; batch 3 spans the epoch boundary
  EXPECT_EQ(std::set<std::size_t>(drawn.begin(), drawn.begin() + 10).size(), 10u);
  EXPECT_EQ(std::set<std::size_t>(drawn.begin() + 10, drawn.end()).size(), 10u);
  EXPECT_EQ(BatchSampler(3, 8, 0).next().size(), 3u);
}

TEST(Training, DeterministicAndAdapterUntouched) {
  const auto adapter = pose::make_mock_adapter<float>(2);
  const auto before = adapter->checksum();
  const auto samples = tiny_samples();
  const auto init = polish::init_params<float>(testkit::toy_polish_config(), 1);
  const auto a = train::train(init, *adapter, samples, tiny_config(4), LossWeights{});
  const auto b = train::train(init, *adapter, samples, tiny_config(4), LossWeights{});
  EXPECT_EQ(polish::checksum(a.params), polish::checksum(b.params));
  EXPECT_NE(polish::checksum(a.params), polish::checksum(init));
  EXPECT_EQ(a.trace.to_csv(), b.trace.to_csv());
  EXPECT_EQ(a.adapter_checksum, before);
  EXPECT_EQ(adapter->checksum(), before);
  EXPECT_EQ(a.iterations, 4);
  ASSERT_EQ(a.trace.records.size(), 4u);
  EXPECT_EQ(a.trace.to_csv().substr(0, a.trace.to_csv().find('\n')), "iteration,lr,E_heatmap,E_PAF,E_pixel,E_total");
  for (const auto& r : a.trace.records) EXPECT_DOUBLE_EQ(r.total, total_loss(r.parts, LossWeights{}));
}

TEST(Training, EarlyStoppingOnFlatScore) {
  const auto adapter = pose::make_mock_adapter<float>(2);
  auto cfg = tiny_config(50);
  cfg.eval_every = 1;
  cfg.patience = 2;
  int calls = 0;
  const ScoreFn<float> flat = [&](const polish::PolishNetParams<float>&) {
    ++calls;
    return 1.0;
  };
  const auto r = train::train(polish::init_params<float>(testkit::toy_polish_config(), 1), *adapter, tiny_samples(),
                              cfg, LossWeights{}, {}, flat);
  EXPECT_TRUE(r.early_stopped);
  EXPECT_EQ(r.iterations, 3);
  EXPECT_EQ(calls, 3);
  ASSERT_TRUE(r.best_score.has_value());
  EXPECT_DOUBLE_EQ(*r.best_score, 1.0);
}

TEST(Training, RejectsBadInputs) {
  const auto adapter = pose::make_mock_adapter<float>(2);
  const auto init = polish::init_params<float>(testkit::toy_polish_config(), 1);
  EXPECT_THROW(train::train(init, *adapter, {}, tiny_config(1), LossWeights{}), ConfigError);
  auto cfg = tiny_config(1);
  cfg.batch_size = 0;
  EXPECT_THROW(train::train(init, *adapter, tiny_samples(), cfg, LossWeights{}), ConfigError);
}

TEST(Training, NonFiniteInputAbortsWithLastGoodParameters) {
  const auto adapter = pose::make_mock_adapter<float>(2);
  const auto init = polish::init_params<float>(testkit::toy_polish_config(), 1);
  auto samples = tiny_samples();
  for (auto& s : samples) s.image(0, 3, 3) = std::numeric_limits<float>::quiet_NaN();
  try {
    train::train(init, *adapter, samples, tiny_config(3), LossWeights{});
    FAIL() << "expected TrainingDiverged";
  } catch (const TrainingDiverged<float>& e) {
    EXPECT_EQ(polish::checksum(e.last_good), polish::checksum(init));
    EXPECT_TRUE(e.trace.records.empty());
  }
}

TEST(Training, RecalibrationUsesUnbiasedDatasetStatistics) {
  const auto adapter = pose::make_mock_adapter<float>(2);
  auto params = polish::init_params<float>(testkit::toy_polish_config(), 1);
  const auto prepared = prepare_samples<float>(tiny_samples(), *adapter, {});
  recalibrate_norm(params, prepared);
  Batch<float> images;
  for (const auto& s : prepared) images.push_back(s.image);
  polish::ForwardTape<float> tape;
  polish::forward_train(params, images, &tape);
  const auto& cache = tape.encoder[0].norm;
  const float n = static_cast<float>(cache.count);
  EXPECT_LT((params.encoder[0].norm.running_mean - cache.batch_mean).cwiseAbs().maxCoeff(), 1e-6f);
  EXPECT_LT((params.encoder[0].norm.running_var - cache.batch_var * (n / (n - 1))).cwiseAbs().maxCoeff(), 1e-5f);
}

TEST(Training, PreparedTargetsLiveAtAdapterResolution) {
  const auto adapter = pose::make_mock_adapter<float>(2);
  const auto samples = tiny_samples();
  const auto prepared = prepare_samples<float>(samples, *adapter, {});
  ASSERT_EQ(prepared.size(), samples.size());
  EXPECT_EQ(prepared[0].targets.heatmaps.height, 14);
  EXPECT_EQ(prepared[0].targets.pafs.channels(), kPafChannels);
}
