#pragma once

// PolishNet: a fully convolutional encoder/decoder mapping a colorized
// pressure image to a "polished" image of the same size.
//
//   encoder block: conv3x3 (valid) x N -> batch norm -> leaky ReLU
//   decoder block: transposed conv3x3 (full) x N -> batch norm -> leaky ReLU
//   output:        logistic squashing into [0,1]
//
// Each valid convolution removes k-1 pixels per axis and each transposed
// convolution adds them back, so the output size equals the input size.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "presspose/layers.hpp"
#include "presspose/named_arrays.hpp"
#include "presspose/tensor.hpp"

namespace presspose::polish {

enum class Mode { kTrain, kEval };

struct PolishNetConfig {
  int encoder_blocks = 3;
  int decoder_blocks = 3;
  int convs_per_block = 2;
  int kernel = 3;
  double leaky_slope = 0.1;
  std::vector<int> channel_widths = {64, 128, 256};
  ImageSize working_size{};
  double norm_eps = 1e-5;
  double norm_momentum = 0.99;

  static constexpr int kImageChannels = 3;

  /// Pixels removed per axis by the encoder.
  int shrink() const { return encoder_blocks * convs_per_block * (kernel - 1); }
  /// Smallest accepted extent is exclusive: each axis must exceed 2 * shrink().
  int min_extent() const { return 2 * shrink(); }
  void validate() const;

  int encoder_in(int block) const { return block == 0 ? kImageChannels : channel_widths[block - 1]; }
  int encoder_out(int block) const { return channel_widths[block]; }
  int decoder_in(int block) const { return channel_widths[encoder_blocks - 1 - block]; }
  int decoder_out(int block) const {
    return block + 1 < decoder_blocks ? channel_widths[encoder_blocks - 2 - block] : kImageChannels;
  }

  nlohmann::json to_json() const;
  static PolishNetConfig from_json(const nlohmann::json& j);
  bool operator==(const PolishNetConfig&) const = default;
};

template <typename Scalar>
struct Block {
  std::vector<nn::ConvWeights<Scalar>> convs;
  nn::NormState<Scalar> norm;
};

template <typename Scalar>
struct PolishNetParams {
  PolishNetConfig config;
  std::vector<Block<Scalar>> encoder;
  std::vector<Block<Scalar>> decoder;

  template <typename To>
  PolishNetParams<To> cast() const;
};

/// Applies `fn(name, matrix)` to every trainable array (weights, biases,
/// normalization scale and shift) in a fixed order.
template <typename Params, typename Fn>
void for_each_trainable(Params& params, Fn&& fn) {
  auto visit_blocks = [&](auto& blocks, const char* prefix, const char* conv_name) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const std::string base = std::string(prefix) + std::to_string(b) + ".";
      for (std::size_t i = 0; i < blocks[b].convs.size(); ++i) {
        const std::string conv = base + conv_name + std::to_string(i) + ".";
        fn(conv + "weight", blocks[b].convs[i].weight);
        fn(conv + "bias", blocks[b].convs[i].bias);
      }
      fn(base + "norm.scale", blocks[b].norm.scale);
      fn(base + "norm.shift", blocks[b].norm.shift);
    }
  };
  visit_blocks(params.encoder, "enc", "conv");
  visit_blocks(params.decoder, "dec", "deconv");
}

template <typename Scalar>
template <typename To>
PolishNetParams<To> PolishNetParams<Scalar>::cast() const {
  PolishNetParams<To> out;
  out.config = config;
  auto cast_blocks = [](const std::vector<Block<Scalar>>& in) {
    std::vector<Block<To>> blocks(in.size());
    for (std::size_t b = 0; b < in.size(); ++b) {
      for (const auto& c : in[b].convs) {
        blocks[b].convs.push_back({c.kernel, c.weight.template cast<To>(), c.bias.template cast<To>()});
      }
      blocks[b].norm = {in[b].norm.scale.template cast<To>(), in[b].norm.shift.template cast<To>(),
                        in[b].norm.running_mean.template cast<To>(), in[b].norm.running_var.template cast<To>()};
    }
    return blocks;
  };
  out.encoder = cast_blocks(encoder);
  out.decoder = cast_blocks(decoder);
  return out;
}

template <typename Scalar>
std::size_t trainable_count(const PolishNetParams<Scalar>& params) {
  std::size_t n = 0;
  for_each_trainable(params, [&](const std::string&, const auto& m) { n += static_cast<std::size_t>(m.size()); });
  return n;
}

template <typename Scalar>
Vector<Scalar> flatten_trainable(const PolishNetParams<Scalar>& params) {
  Vector<Scalar> flat(static_cast<Eigen::Index>(trainable_count(params)));
  Eigen::Index pos = 0;
  for_each_trainable(params, [&](const std::string&, const auto& m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) flat[pos++] = m.data()[i];
  });
  return flat;
}

template <typename Scalar>
void assign_trainable(PolishNetParams<Scalar>& params, const Vector<Scalar>& flat) {
  Eigen::Index pos = 0;
  for_each_trainable(params, [&](const std::string&, auto& m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = flat[pos++];
  });
  if (pos != flat.size()) throw ShapeError("assign_trainable: parameter vector has the wrong length");
}

/// Structure of `params` with every trainable array zeroed.
template <typename Scalar>
PolishNetParams<Scalar> zero_gradients(const PolishNetParams<Scalar>& params) {
  PolishNetParams<Scalar> g = params;
  for_each_trainable(g, [](const std::string&, auto& m) { m.setZero(); });
  return g;
}

/// Fan-in scaled uniform weights (bound sqrt(6 / fan_in)), zero biases,
/// identity normalization. Deterministic for a given seed and independent of
/// the scalar type.
template <typename Scalar>
PolishNetParams<Scalar> init_params(const PolishNetConfig& config, std::uint64_t seed) {
  config.validate();
  std::mt19937_64 rng(seed);
  const int k = config.kernel;
  auto draw = [&](Planes<Scalar>& w, int fan_in) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const double bound = std::sqrt(6.0 / fan_in);
    for (Eigen::Index i = 0; i < w.size(); ++i) w.data()[i] = static_cast<Scalar>(bound * dist(rng));
  };
  PolishNetParams<Scalar> p;
  p.config = config;
  for (int b = 0; b < config.encoder_blocks; ++b) {
    Block<Scalar> block;
    int in = config.encoder_in(b);
    const int out = config.encoder_out(b);
    for (int i = 0; i < config.convs_per_block; ++i) {
      nn::ConvWeights<Scalar> c{k, Planes<Scalar>(out, in * k * k), Vector<Scalar>::Zero(out)};
      draw(c.weight, in * k * k);
      block.convs.push_back(std::move(c));
      in = out;
    }
    block.norm = nn::NormState<Scalar>::identity(out);
    p.encoder.push_back(std::move(block));
  }
  for (int b = 0; b < config.decoder_blocks; ++b) {
    Block<Scalar> block;
    int in = config.decoder_in(b);
    const int out = config.decoder_out(b);
    for (int i = 0; i < config.convs_per_block; ++i) {
      nn::ConvWeights<Scalar> c{k, Planes<Scalar>(in, out * k * k), Vector<Scalar>::Zero(out)};
      draw(c.weight, in * k * k);
      block.convs.push_back(std::move(c));
      in = out;
    }
    block.norm = nn::NormState<Scalar>::identity(out);
    p.decoder.push_back(std::move(block));
  }
  return p;
}

template <typename Scalar>
struct BlockTape {
  std::vector<Batch<Scalar>> conv_inputs;  // [conv][sample]
  nn::NormCache<Scalar> norm;
  Batch<Scalar> activation_inputs;  // normalization output, before leaky ReLU
};

/// Intermediate values of a training-mode forward pass, consumed by backward().
template <typename Scalar>
struct ForwardTape {
  std::vector<BlockTape<Scalar>> encoder;
  std::vector<BlockTape<Scalar>> decoder;
  Batch<Scalar> output;
};

template <typename Scalar>
void require_working_size(const PolishNetConfig& config, const FeatureMap<Scalar>& image) {
  if (image.channels() != PolishNetConfig::kImageChannels || image.height != config.working_size.height ||
      image.width != config.working_size.width) {
    throw ShapeError("polishnet: expected " +
                     shape_string(3, config.working_size.height, config.working_size.width) + " input, got " +
                     shape_string(image));
  }
}

/// Training-mode forward: normalization uses statistics of this batch.
/// Running statistics are not touched; see update_running_stats().
template <typename Scalar>
Batch<Scalar> forward_train(const PolishNetParams<Scalar>& params, const Batch<Scalar>& images,
                            ForwardTape<Scalar>* tape = nullptr) {
  if (images.empty()) throw ShapeError("polishnet: empty batch");
  for (const auto& im : images) require_working_size(params.config, im);
  const auto slope = static_cast<Scalar>(params.config.leaky_slope);
  const auto eps = static_cast<Scalar>(params.config.norm_eps);

  Batch<Scalar> x = images;
  auto run_block = [&](const Block<Scalar>& block, bool transposed) {
    BlockTape<Scalar> bt;
    for (const auto& conv : block.convs) {
      Batch<Scalar> next;
      next.reserve(x.size());
      for (const auto& m : x) next.push_back(transposed ? nn::deconv2d(m, conv) : nn::conv2d(m, conv, 0));
      if (tape != nullptr) bt.conv_inputs.push_back(std::move(x));
      x = std::move(next);
    }
    Batch<Scalar> normed = nn::batch_norm_train(x, block.norm, eps, &bt.norm);
    x.clear();
    for (const auto& m : normed) x.push_back(nn::leaky_relu(m, slope));
    if (tape != nullptr) {
      bt.activation_inputs = std::move(normed);
      (transposed ? tape->decoder : tape->encoder).push_back(std::move(bt));
    }
  };
  for (const auto& block : params.encoder) run_block(block, false);
  for (const auto& block : params.decoder) run_block(block, true);
  for (auto& m : x) m = nn::sigmoid(m);
  if (tape != nullptr) tape->output = x;
  return x;
}

/// Folds the batch statistics recorded in `tape` into the running estimates.
template <typename Scalar>
void update_running_stats(PolishNetParams<Scalar>& params, const ForwardTape<Scalar>& tape) {
  const auto momentum = static_cast<Scalar>(params.config.norm_momentum);
  for (std::size_t b = 0; b < params.encoder.size(); ++b)
    nn::update_running_stats(params.encoder[b].norm, tape.encoder[b].norm, momentum);
  for (std::size_t b = 0; b < params.decoder.size(); ++b)
    nn::update_running_stats(params.decoder[b].norm, tape.decoder[b].norm, momentum);
}

template <typename Scalar>
FeatureMap<Scalar> forward_eval(const PolishNetParams<Scalar>& params, const FeatureMap<Scalar>& image) {
  require_working_size(params.config, image);
  const auto slope = static_cast<Scalar>(params.config.leaky_slope);
  const auto eps = static_cast<Scalar>(params.config.norm_eps);
  FeatureMap<Scalar> x = image;
  for (const auto& block : params.encoder) {
    for (const auto& conv : block.convs) x = nn::conv2d(x, conv, 0);
    x = nn::leaky_relu(nn::batch_norm_eval(x, block.norm, eps), slope);
  }
  for (const auto& block : params.decoder) {
    for (const auto& conv : block.convs) x = nn::deconv2d(x, conv);
    x = nn::leaky_relu(nn::batch_norm_eval(x, block.norm, eps), slope);
  }
  return nn::sigmoid(x);
}

/// I' = P(I). Train mode normalizes with the statistics of this single image.
template <typename Scalar>
FeatureMap<Scalar> forward(const PolishNetParams<Scalar>& params, const FeatureMap<Scalar>& image, Mode mode) {
  if (mode == Mode::kEval) return forward_eval(params, image);
  return forward_train(params, Batch<Scalar>{image}).front();
}

/// Gradients of a scalar loss with respect to the trainable arrays, given
/// dLoss/dOutput for every sample of the taped batch. Optionally returns
/// dLoss/dInput.
template <typename Scalar>
PolishNetParams<Scalar> backward(const PolishNetParams<Scalar>& params, const ForwardTape<Scalar>& tape,
                                 const Batch<Scalar>& grad_output, Batch<Scalar>* grad_input = nullptr) {
  const auto slope = static_cast<Scalar>(params.config.leaky_slope);
  PolishNetParams<Scalar> grads = zero_gradients(params);
  Batch<Scalar> g;
  g.reserve(grad_output.size());
  for (std::size_t n = 0; n < grad_output.size(); ++n) g.push_back(nn::sigmoid_backward(tape.output[n], grad_output[n]));

  auto back_block = [&](const Block<Scalar>& block, const BlockTape<Scalar>& bt, Block<Scalar>& gb, bool transposed) {
    for (std::size_t n = 0; n < g.size(); ++n) g[n] = nn::leaky_relu_backward(bt.activation_inputs[n], g[n], slope);
    g = nn::batch_norm_backward(g, block.norm, bt.norm, &gb.norm.scale, &gb.norm.shift);
    for (std::size_t i = block.convs.size(); i-- > 0;) {
      for (std::size_t n = 0; n < g.size(); ++n) {
        g[n] = transposed ? nn::deconv2d_backward(bt.conv_inputs[i][n], block.convs[i], g[n], &gb.convs[i])
                          : nn::conv2d_backward(bt.conv_inputs[i][n], block.convs[i], 0, g[n], &gb.convs[i]);
      }
    }
  };
  for (std::size_t b = params.decoder.size(); b-- > 0;) back_block(params.decoder[b], tape.decoder[b], grads.decoder[b], true);
  for (std::size_t b = params.encoder.size(); b-- > 0;) back_block(params.encoder[b], tape.encoder[b], grads.encoder[b], false);
  if (grad_input != nullptr) *grad_input = std::move(g);
  return grads;
}

template <typename Scalar>
void require_finite(const PolishNetParams<Scalar>& params) {
  for_each_trainable(params, [](const std::string& name, const auto& m) {
    if (!m.allFinite()) throw NumericalError("polishnet: non-finite values in " + name);
  });
}

// Checkpoints store float32 regardless of the in-memory scalar type.
NamedArrays to_named_arrays(const PolishNetParams<float>& params);
PolishNetParams<float> params_from_named_arrays(const NamedArrays& arrays);
void save_checkpoint(const PolishNetParams<float>& params, const std::filesystem::path& path,
                     const nlohmann::json& extra_meta = nlohmann::json::object());
PolishNetParams<float> load_checkpoint(const std::filesystem::path& path);

/// FNV-1a over the bytes of every stored array, running statistics included.
std::uint64_t checksum(const PolishNetParams<float>& params);

}  // namespace presspose::polish
