#pragma once

// Optimization of PolishNet against a frozen pose adapter:
//   E = l_h * E_heatmap + l_paf * E_paf + l_pix * E_pixel
// Only PolishNet parameters change; the adapter is read-only and its checksum
// is verified after every run.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "presspose/dataset.hpp"
#include "presspose/losses.hpp"
#include "presspose/polishnet.hpp"
#include "presspose/pose_adapter.hpp"
#include "presspose/targets.hpp"

namespace presspose::train {

using data::Sample;

struct TrainConfig {
  double learning_rate = 1e-4;
  double decay_rate = 0.95;
  int decay_every = 100;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int batch_size = 8;
  int max_iterations = 1000;
  std::uint64_t seed = 0;
  /// Holdout evaluation period in iterations; 0 disables early stopping.
  int eval_every = 0;
  int patience = 10;
  /// Re-estimate normalization running statistics over the whole training
  /// set once training ends.
  bool recalibrate_norm = true;
  /// Training is single-threaded and deterministic; kept explicit so the
  /// effective-config echo records it.
  bool single_producer = true;

  void validate() const {
    if (!(learning_rate > 0.0)) throw ConfigError("train: learning_rate must be positive");
    if (!(decay_rate > 0.0 && decay_rate <= 1.0)) throw ConfigError("train: decay_rate must be in (0, 1]");
    if (decay_every < 1) throw ConfigError("train: decay_every must be positive");
    if (batch_size < 1) throw ConfigError("train: batch_size must be positive");
    if (max_iterations < 0) throw ConfigError("train: max_iterations must be non-negative");
    if (eval_every < 0 || patience < 1) throw ConfigError("train: invalid early stopping settings");
    if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0) || !(epsilon > 0.0)) {
      throw ConfigError("train: invalid optimizer settings");
    }
  }
};

/// lr(t) = lr0 * decay^floor(t / decay_every), t counted from 0.
inline double learning_rate_at(const TrainConfig& cfg, int iteration) {
  return cfg.learning_rate * std::pow(cfg.decay_rate, iteration / cfg.decay_every);
}

/// Ground-truth rendering settings in working-resolution pixels.
struct TargetSettings {
  double sigma = 0.0;       // 0: 2% of working height
  double limb_width = 0.0;  // 0: 2% of working height

  TargetSettings resolved(ImageSize working) const {
    return {sigma > 0.0 ? sigma : targets::default_sigma(working),
            limb_width > 0.0 ? limb_width : targets::default_limb_width(working)};
  }
};

template <typename Scalar>
struct PreparedSample {
  FeatureMap<Scalar> image;
  targets::TargetMaps<Scalar> targets;
};

/// Renders targets directly at the adapter's map resolution.
template <typename Scalar>
std::vector<PreparedSample<Scalar>> prepare_samples(const std::vector<Sample>& samples,
                                                    const pose::PoseAdapter<Scalar>& adapter,
                                                    const TargetSettings& settings) {
  std::vector<PreparedSample<Scalar>> out;
  out.reserve(samples.size());
  for (const auto& s : samples) {
    const ImageSize working{s.image.height, s.image.width};
    const TargetSettings t = settings.resolved(working);
    const double scale = adapter.output_scale();
    const ImageSize map_size = adapter.output_size(working);
    out.push_back({s.image.template cast<Scalar>(),
                   targets::make_targets<Scalar>(s.keypoints.scaled(scale), map_size, t.sigma * scale,
                                                 t.limb_width * scale)});
  }
  return out;
}

/// Loss terms of one polished image; optionally dE/dPolished.
template <typename Scalar>
LossParts sample_losses(const pose::PoseAdapter<Scalar>& adapter, const PreparedSample<Scalar>& sample,
                        const FeatureMap<Scalar>& polished, const LossWeights& w,
                        FeatureMap<Scalar>* grad_polished = nullptr) {
  const auto maps = adapter.infer(polished);
  const auto& t = sample.targets;
  LossParts parts;
  parts.heatmap = static_cast<double>(heatmap_loss(maps.heatmaps, t.heatmaps, t.mask.parts));
  parts.paf = static_cast<double>(paf_loss(maps.pafs, t.pafs, t.mask.limbs));
  parts.pixel = static_cast<double>(pixel_loss(sample.image, polished));
  if (grad_polished != nullptr) {
    const auto paf_mask = paf_channel_mask(t.mask.limbs);
    pose::PoseMaps<Scalar> g{
        masked_sse_gradient(maps.heatmaps, t.heatmaps, std::span<const bool>(t.mask.parts),
                            static_cast<Scalar>(w.heatmap)),
        masked_sse_gradient(maps.pafs, t.pafs, std::span<const bool>(paf_mask), static_cast<Scalar>(w.paf))};
    *grad_polished = adapter.input_gradient(polished, g);
    grad_polished->data += (2 * static_cast<Scalar>(w.pixel)) * (polished.data - sample.image.data);
  }
  return parts;
}

/// Training-mode objective summed over `batch`. With `grads`, also fills
/// dE/dtheta; with `tape`, keeps the forward intermediates.
template <typename Scalar>
LossParts batch_objective(const polish::PolishNetParams<Scalar>& params, const pose::PoseAdapter<Scalar>& adapter,
                          const std::vector<const PreparedSample<Scalar>*>& batch, const LossWeights& w,
                          polish::PolishNetParams<Scalar>* grads = nullptr,
                          polish::ForwardTape<Scalar>* tape = nullptr) {
  Batch<Scalar> images;
  images.reserve(batch.size());
  for (const auto* s : batch) images.push_back(s->image);
  polish::ForwardTape<Scalar> local;
  polish::ForwardTape<Scalar>* used = tape != nullptr ? tape : (grads != nullptr ? &local : nullptr);
  const Batch<Scalar> polished = polish::forward_train(params, images, used);
  LossParts total;
  Batch<Scalar> grad_out(batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) {
    total += sample_losses(adapter, *batch[i], polished[i], w, grads != nullptr ? &grad_out[i] : nullptr);
  }
  if (grads != nullptr) *grads = polish::backward(params, *used, grad_out);
  return total;
}

/// Evaluation-mode loss terms summed over `samples`.
template <typename Scalar>
LossParts eval_objective(const polish::PolishNetParams<Scalar>& params, const pose::PoseAdapter<Scalar>& adapter,
                         const std::vector<PreparedSample<Scalar>>& samples, const LossWeights& w) {
  LossParts total;
  for (const auto& s : samples) total += sample_losses(adapter, s, polish::forward_eval(params, s.image), w);
  return total;
}

/// Adaptive moment estimation on a flat parameter vector.
template <typename Scalar>
class Adam {
 public:
  Adam(Eigen::Index size, double beta1, double beta2, double epsilon)
      : m_(Vector<Scalar>::Zero(size)), v_(Vector<Scalar>::Zero(size)), beta1_(beta1), beta2_(beta2), eps_(epsilon) {}

  void step(Vector<Scalar>& theta, const Vector<Scalar>& grad, double lr) {
    ++t_;
    const auto b1 = static_cast<Scalar>(beta1_);
    const auto b2 = static_cast<Scalar>(beta2_);
    m_ = b1 * m_ + (1 - b1) * grad;
    v_ = b2 * v_ + (1 - b2) * grad.cwiseAbs2();
    const double c1 = 1.0 - std::pow(beta1_, t_);
    const double c2 = 1.0 - std::pow(beta2_, t_);
    const auto step = static_cast<Scalar>(lr / c1);
    const auto root_c2 = static_cast<Scalar>(std::sqrt(c2));
    theta.array() -= step * m_.array() / ((v_.array().sqrt() / root_c2) + static_cast<Scalar>(eps_));
  }

  int steps() const { return t_; }

 private:
  Vector<Scalar> m_;
  Vector<Scalar> v_;
  double beta1_;
  double beta2_;
  double eps_;
  int t_ = 0;
};

struct LossRecord {
  int iteration = 0;
  double lr = 0.0;
  LossParts parts;
  double total = 0.0;
};

/// Per-iteration losses of the batch seen at that iteration, before its update.
struct LossTrace {
  std::vector<LossRecord> records;

  std::string to_csv() const;
  void save_csv(const std::filesystem::path& path) const;
};

/// Aborted run: carries the parameters from before the failing update.
template <typename Scalar>
class TrainingDiverged : public NumericalError {
 public:
  TrainingDiverged(const std::string& what, polish::PolishNetParams<Scalar> last_good, LossTrace trace)
      : NumericalError(what), last_good(std::move(last_good)), trace(std::move(trace)) {}

  polish::PolishNetParams<Scalar> last_good;
  LossTrace trace;
};

template <typename Scalar>
struct TrainResult {
  polish::PolishNetParams<Scalar> params;
  LossTrace trace;
  int iterations = 0;
  bool early_stopped = false;
  std::optional<double> best_score;
  std::uint64_t adapter_checksum = 0;
};

/// Higher is better; called every `eval_every` iterations on a parameter copy.
template <typename Scalar>
using ScoreFn = std::function<double(const polish::PolishNetParams<Scalar>&)>;

/// Deterministic batch order: shuffle once per epoch, no replacement. A
/// batch may straddle two epochs.
class BatchSampler {
 public:
  BatchSampler(std::size_t dataset_size, std::size_t batch_size, std::uint64_t seed)
      : order_(dataset_size), batch_(std::min(batch_size, dataset_size)), rng_(seed) {
    reshuffle();
  }

  std::vector<std::size_t> next() {
    std::vector<std::size_t> out;
    out.reserve(batch_);
    while (out.size() < batch_) {
      if (pos_ == order_.size()) reshuffle();
      out.push_back(order_[pos_++]);
    }
    return out;
  }

 private:
  void reshuffle() {
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::shuffle(order_.begin(), order_.end(), rng_);
    pos_ = 0;
  }

  std::vector<std::size_t> order_;
  std::size_t batch_;
  std::size_t pos_ = 0;
  std::mt19937_64 rng_;
};

/// Sets every normalization layer's running statistics to the statistics of
/// `samples` taken as one batch.
template <typename Scalar>
void recalibrate_norm(polish::PolishNetParams<Scalar>& params, const std::vector<PreparedSample<Scalar>>& samples) {
  Batch<Scalar> images;
  for (const auto& s : samples) images.push_back(s.image);
  polish::ForwardTape<Scalar> tape;
  polish::forward_train(params, images, &tape);
  auto set = [](nn::NormState<Scalar>& n, const nn::NormCache<Scalar>& c) {
    const Scalar count = static_cast<Scalar>(c.count);
    n.running_mean = c.batch_mean;
    n.running_var = c.count > 1 ? (c.batch_var * (count / (count - 1))).eval() : c.batch_var;
  };
  for (std::size_t b = 0; b < params.encoder.size(); ++b) set(params.encoder[b].norm, tape.encoder[b].norm);
  for (std::size_t b = 0; b < params.decoder.size(); ++b) set(params.decoder[b].norm, tape.decoder[b].norm);
}

template <typename Scalar>
TrainResult<Scalar> train(polish::PolishNetParams<Scalar> params, const pose::PoseAdapter<Scalar>& adapter,
                          const std::vector<Sample>& dataset, const TrainConfig& cfg, const LossWeights& w,
                          const TargetSettings& settings = {}, const ScoreFn<Scalar>& score = {}) {
  cfg.validate();
  w.validate();
  if (!adapter.differentiable()) throw ConfigError("train: adapter " + adapter.name() + " is not differentiable");
  if (dataset.empty()) throw ConfigError("train: empty dataset");
  const std::uint64_t adapter_sum = adapter.checksum();

  const auto prepared = prepare_samples(dataset, adapter, settings);
  BatchSampler sampler(prepared.size(), static_cast<std::size_t>(cfg.batch_size), cfg.seed);
  Vector<Scalar> theta = flatten_trainable(params);
  Adam<Scalar> adam(theta.size(), cfg.beta1, cfg.beta2, cfg.epsilon);

  TrainResult<Scalar> result;
  std::optional<polish::PolishNetParams<Scalar>> best;
  int stale = 0;
  int t = 0;
  for (; t < cfg.max_iterations; ++t) {
    std::vector<const PreparedSample<Scalar>*> batch;
    for (std::size_t i : sampler.next()) batch.push_back(&prepared[i]);

    polish::PolishNetParams<Scalar> grads;
    polish::ForwardTape<Scalar> tape;
    LossRecord rec;
    rec.iteration = t;
    rec.lr = learning_rate_at(cfg, t);
    try {
      rec.parts = batch_objective(params, adapter, batch, w, &grads, &tape);
      rec.total = total_loss(rec.parts, w);
    } catch (const NumericalError& e) {
      throw TrainingDiverged<Scalar>("iteration " + std::to_string(t) + ": " + e.what(), params, result.trace);
    }
    const Vector<Scalar> g = flatten_trainable(grads);
    if (!g.allFinite()) {
      throw TrainingDiverged<Scalar>("iteration " + std::to_string(t) + ": non-finite gradient", params,
                                     result.trace);
    }
    result.trace.records.push_back(rec);

    const polish::PolishNetParams<Scalar> last_good = params;
    adam.step(theta, g, rec.lr);
    if (!theta.allFinite()) {
      throw TrainingDiverged<Scalar>("iteration " + std::to_string(t) + ": non-finite parameters", last_good,
                                     result.trace);
    }
    assign_trainable(params, theta);
    polish::update_running_stats(params, tape);

    if (score && cfg.eval_every > 0 && (t + 1) % cfg.eval_every == 0) {
      polish::PolishNetParams<Scalar> snapshot = params;
      if (cfg.recalibrate_norm) recalibrate_norm(snapshot, prepared);
      const double s = score(snapshot);
      if (!result.best_score || s > *result.best_score) {
        result.best_score = s;
        best = std::move(snapshot);
        stale = 0;
      } else if (++stale >= cfg.patience) {
        result.early_stopped = true;
        ++t;
        break;
      }
    }
  }
  result.iterations = t;
  if (best) {
    result.params = std::move(*best);
  } else {
    result.params = std::move(params);
    if (cfg.recalibrate_norm) recalibrate_norm(result.params, prepared);
  }
  if (adapter.checksum() != adapter_sum) {
    throw std::logic_error("train: adapter " + adapter.name() + " parameters changed during training");
  }
  result.adapter_checksum = adapter_sum;
  return result;
}

}  // namespace presspose::train
