#pragma once

// Central finite differences for the full training objective:
// PolishNet (toy config) -> mock adapter -> weighted loss, in double.

#include <random>
#include <vector>

#include "oracles.hpp"
#include "presspose/training.hpp"

namespace presspose::testkit {

inline polish::PolishNetConfig toy_polish_config(ImageSize size = {28, 28}) {
  polish::PolishNetConfig c;
  c.channel_widths = {2, 3, 4};
  c.working_size = size;
  return c;
}

struct GradientCheck {
  double relative_error = 0.0;  // |fd - analytic| / |fd| over every parameter
  std::size_t parameters = 0;
};

inline GradientCheck objective_gradient_check(std::uint64_t seed, int batch_size = 2) {
  const ImageSize size{28, 28};
  std::mt19937_64 rng(seed);
  pose::MockOptions mo;
  mo.seed = seed + 100;
  mo.hidden = {4, 4};
  const auto adapter = pose::make_mock_adapter<double>(mo);
  auto params = polish::init_params<double>(toy_polish_config(size), seed);

  std::uniform_real_distribution<float> u(0.0f, 1.0f);
  std::vector<data::Sample> samples;
  for (int i = 0; i < batch_size; ++i) {
    data::Sample s;
    s.image = ColorImage(3, size.height, size.width);
    for (Eigen::Index j = 0; j < s.image.data.size(); ++j) s.image.data.data()[j] = u(rng);
    s.keypoints = random_keypoints(rng, size, 0.8);
    samples.push_back(std::move(s));
  }
  const auto prepared = train::prepare_samples<double>(samples, *adapter, train::TargetSettings{2.0, 1.5});
  std::vector<const train::PreparedSample<double>*> batch;
  for (const auto& p : prepared) batch.push_back(&p);
  const train::LossWeights w;

  polish::PolishNetParams<double> grads;
  train::batch_objective(params, *adapter, batch, w, &grads);
  const Vector<double> analytic = polish::flatten_trainable(grads);
  Vector<double> theta = polish::flatten_trainable(params);

  auto objective = [&](const Vector<double>& t) {
    polish::assign_trainable(params, t);
    return train::total_loss(train::batch_objective(params, *adapter, batch, w), w);
  };
  Vector<double> numeric(theta.size());
  const double h = 1e-6;
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    Vector<double> plus = theta;
    Vector<double> minus = theta;
    plus[i] += h;
    minus[i] -= h;
    numeric[i] = (objective(plus) - objective(minus)) / (2.0 * h);
  }
  return {(numeric - analytic).norm() / numeric.norm(), static_cast<std::size_t>(theta.size())};
}

}  // namespace presspose::testkit
