#pragma once

// The frozen pose-identification function: image in, 14 confidence maps and
// 28 part affinity fields out. Adapters are immutable after construction;
// training only ever reads them.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "presspose/layers.hpp"
#include "presspose/named_arrays.hpp"
#include "presspose/skeleton.hpp"
#include "presspose/tensor.hpp"

namespace presspose::pose {

template <typename Scalar>
struct PoseMaps {
  FeatureMap<Scalar> heatmaps;  // 14 channels
  FeatureMap<Scalar> pafs;      // 28 channels
};

template <typename Scalar>
class PoseAdapter {
 public:
  virtual ~PoseAdapter() = default;

  virtual const std::string& name() const = 0;
  /// Map resolution divided by input resolution.
  virtual double output_scale() const = 0;
  virtual bool differentiable() const = 0;
  virtual ImageSize output_size(ImageSize input) const = 0;
  virtual PoseMaps<Scalar> infer(const FeatureMap<Scalar>& image) const = 0;
  /// dLoss/dImage given dLoss/dHeatmaps and dLoss/dPafs at `image`.
  virtual FeatureMap<Scalar> input_gradient(const FeatureMap<Scalar>& image, const PoseMaps<Scalar>& grad) const = 0;
  /// Hash of every parameter, recomputed on each call.
  virtual std::uint64_t checksum() const = 0;
};

enum class OpKind { kConv, kRelu, kLeakyRelu, kMaxPool, kAvgPool };

template <typename Scalar>
struct Op {
  OpKind kind = OpKind::kConv;
  std::string name;
  nn::ConvWeights<Scalar> conv;  // kConv only
  int pad = 0;
  int pool = 2;
  Scalar slope = Scalar(0);
};

/// Multi-stage two-branch network: a shared backbone, then stages whose
/// input is the backbone features (first stage) or the features stacked
/// with the previous stage's confidence maps and affinity fields.
template <typename Scalar>
struct StagedNetworkSpec {
  std::string name;
  Scalar input_offset = Scalar(0.5);
  Scalar input_scale = Scalar(1);
  std::vector<Op<Scalar>> backbone;
  std::vector<std::vector<Op<Scalar>>> heatmap_branch;  // one op list per stage
  std::vector<std::vector<Op<Scalar>>> paf_branch;
  std::vector<int> keep_heatmaps;  // empty: keep all
  std::vector<int> keep_pafs;
};

template <typename Scalar>
class StagedPoseNetwork final : public PoseAdapter<Scalar> {
 public:
  explicit StagedPoseNetwork(StagedNetworkSpec<Scalar> spec);

  const std::string& name() const override { return spec_.name; }
  double output_scale() const override { return scale_; }
  bool differentiable() const override { return true; }
  ImageSize output_size(ImageSize input) const override;
  PoseMaps<Scalar> infer(const FeatureMap<Scalar>& image) const override;
  FeatureMap<Scalar> input_gradient(const FeatureMap<Scalar>& image, const PoseMaps<Scalar>& grad) const override;
  std::uint64_t checksum() const override;

  const StagedNetworkSpec<Scalar>& spec() const { return spec_; }
  int stage_count() const { return static_cast<int>(spec_.heatmap_branch.size()); }

 private:
  struct Tape {
    std::vector<FeatureMap<Scalar>> backbone;            // input of every backbone op
    std::vector<std::vector<FeatureMap<Scalar>>> heat;   // [stage][op]
    std::vector<std::vector<FeatureMap<Scalar>>> paf;
    FeatureMap<Scalar> features;
    std::vector<FeatureMap<Scalar>> stage_heat_out;
    std::vector<FeatureMap<Scalar>> stage_paf_out;
  };

  PoseMaps<Scalar> run(const FeatureMap<Scalar>& image, Tape* tape) const;

  StagedNetworkSpec<Scalar> spec_;
  int feature_channels_ = 0;
  int raw_heatmaps_ = 0;
  int raw_pafs_ = 0;
  double scale_ = 1.0;
};

// ---------------------------------------------------------------------------

namespace detail {

inline ImageSize apply_op_size(OpKind kind, int kernel, int pad, int pool, ImageSize s) {
  switch (kind) {
    case OpKind::kConv:
      return {s.height + 2 * pad - kernel + 1, s.width + 2 * pad - kernel + 1};
    case OpKind::kMaxPool:
    case OpKind::kAvgPool:
      return {s.height / pool, s.width / pool};
    default:
      return s;
  }
}

/// Output channel count of an op list, validating conv input widths.
template <typename Scalar>
int trace_channels(const std::vector<Op<Scalar>>& ops, int channels, const std::string& where) {
  for (const auto& op : ops) {
    if (op.kind != OpKind::kConv) continue;
    const int k = op.conv.kernel;
    if (op.conv.weight.cols() != static_cast<Eigen::Index>(channels) * k * k) {
      throw WeightSchemaError(where + ": layer " + op.name + " expects " +
                              std::to_string(op.conv.weight.cols() / (k * k)) + " input channels, receives " +
                              std::to_string(channels));
    }
    channels = static_cast<int>(op.conv.weight.rows());
  }
  return channels;
}

template <typename Scalar>
FeatureMap<Scalar> apply_op(const Op<Scalar>& op, const FeatureMap<Scalar>& x) {
  switch (op.kind) {
    case OpKind::kConv:
      return nn::conv2d(x, op.conv, op.pad);
    case OpKind::kRelu:
      return nn::relu(x);
    case OpKind::kLeakyRelu:
      return nn::leaky_relu(x, op.slope);
    case OpKind::kMaxPool:
      return nn::max_pool(x, op.pool);
    case OpKind::kAvgPool:
      return nn::avg_pool(x, op.pool);
  }
  return x;
}

template <typename Scalar>
FeatureMap<Scalar> apply_op_backward(const Op<Scalar>& op, const FeatureMap<Scalar>& in, const FeatureMap<Scalar>& g) {
  switch (op.kind) {
    case OpKind::kConv:
      return nn::conv2d_backward(in, op.conv, op.pad, g, static_cast<nn::ConvWeights<Scalar>*>(nullptr));
    case OpKind::kRelu:
      return nn::relu_backward(in, g);
    case OpKind::kLeakyRelu:
      return nn::leaky_relu_backward(in, g, op.slope);
    case OpKind::kMaxPool:
      return nn::max_pool_backward(in, g, op.pool);
    case OpKind::kAvgPool:
      return nn::avg_pool_backward(in, g, op.pool);
  }
  return g;
}

template <typename Scalar>
FeatureMap<Scalar> run_ops(const std::vector<Op<Scalar>>& ops, FeatureMap<Scalar> x,
                           std::vector<FeatureMap<Scalar>>* inputs, const std::string& adapter) {
  for (const auto& op : ops) {
    if (inputs != nullptr) inputs->push_back(x);
    x = apply_op(op, x);
    if (op.kind == OpKind::kConv && !x.data.allFinite()) {
      throw NumericalError(adapter + ": non-finite activations after layer " + op.name);
    }
  }
  return x;
}

template <typename Scalar>
FeatureMap<Scalar> run_ops_backward(const std::vector<Op<Scalar>>& ops, const std::vector<FeatureMap<Scalar>>& inputs,
                                    FeatureMap<Scalar> g) {
  for (std::size_t i = ops.size(); i-- > 0;) g = apply_op_backward(ops[i], inputs[i], g);
  return g;
}

inline void hash_bytes(std::uint64_t& h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
}

template <typename Scalar>
void hash_ops(std::uint64_t& h, const std::vector<Op<Scalar>>& ops) {
  for (const auto& op : ops) {
    if (op.kind != OpKind::kConv) continue;
    hash_bytes(h, op.conv.weight.data(), sizeof(Scalar) * op.conv.weight.size());
    hash_bytes(h, op.conv.bias.data(), sizeof(Scalar) * op.conv.bias.size());
  }
}

}  // namespace detail

template <typename Scalar>
StagedPoseNetwork<Scalar>::StagedPoseNetwork(StagedNetworkSpec<Scalar> spec) : spec_(std::move(spec)) {
  const int stages = static_cast<int>(spec_.heatmap_branch.size());
  if (stages < 1 || spec_.paf_branch.size() != spec_.heatmap_branch.size()) {
    throw WeightSchemaError(spec_.name + ": need matching heatmap and PAF branches for at least one stage");
  }
  feature_channels_ = detail::trace_channels(spec_.backbone, 3, spec_.name + " backbone");
  for (int s = 0; s < stages; ++s) {
    const int in = s == 0 ? feature_channels_ : feature_channels_ + raw_heatmaps_ + raw_pafs_;
    const int heat = detail::trace_channels(spec_.heatmap_branch[s], in, spec_.name + " stage " + std::to_string(s + 1));
    const int paf = detail::trace_channels(spec_.paf_branch[s], in, spec_.name + " stage " + std::to_string(s + 1));
    if (s > 0 && (heat != raw_heatmaps_ || paf != raw_pafs_)) {
      throw WeightSchemaError(spec_.name + ": stage " + std::to_string(s + 1) + " changes output channel counts");
    }
    raw_heatmaps_ = heat;
    raw_pafs_ = paf;
  }
  auto check_keep = [&](const std::vector<int>& keep, int raw, int expected, const char* what) {
    const int kept = keep.empty() ? raw : static_cast<int>(keep.size());
    for (int idx : keep)
      if (idx < 0 || idx >= raw) throw WeightSchemaError(spec_.name + ": " + what + " index out of range");
    if (kept != expected) {
      throw WeightSchemaError(spec_.name + ": " + std::to_string(kept) + " " + what + " channels, expected " +
                              std::to_string(expected));
    }
  };
  check_keep(spec_.keep_heatmaps, raw_heatmaps_, kPartCount, "heatmap");
  check_keep(spec_.keep_pafs, raw_pafs_, kPafChannels, "PAF");

  int pools = 1;
  for (const auto& op : spec_.backbone)
    if (op.kind == OpKind::kMaxPool || op.kind == OpKind::kAvgPool) pools *= op.pool;
  scale_ = 1.0 / pools;
}

template <typename Scalar>
std::uint64_t StagedPoseNetwork<Scalar>::checksum() const {
  std::uint64_t h = 1469598103934665603ULL;
  detail::hash_ops(h, spec_.backbone);
  for (std::size_t s = 0; s < spec_.heatmap_branch.size(); ++s) {
    detail::hash_ops(h, spec_.heatmap_branch[s]);
    detail::hash_ops(h, spec_.paf_branch[s]);
  }
  return h;
}

template <typename Scalar>
ImageSize StagedPoseNetwork<Scalar>::output_size(ImageSize input) const {
  ImageSize s = input;
  for (const auto& op : spec_.backbone) s = detail::apply_op_size(op.kind, op.conv.kernel, op.pad, op.pool, s);
  // Branch convolutions are expected to preserve size; check on the first stage.
  for (const auto& op : spec_.heatmap_branch.front())
    s = detail::apply_op_size(op.kind, op.conv.kernel, op.pad, op.pool, s);
  return s;
}

template <typename Scalar>
PoseMaps<Scalar> StagedPoseNetwork<Scalar>::run(const FeatureMap<Scalar>& image, Tape* tape) const {
  if (image.channels() != 3) throw ShapeError(spec_.name + ": expected a 3-channel image");
  FeatureMap<Scalar> x = image;
  x.data = ((image.data.array() - spec_.input_offset) * spec_.input_scale).matrix();
  FeatureMap<Scalar> features =
      detail::run_ops(spec_.backbone, std::move(x), tape ? &tape->backbone : nullptr, spec_.name);
  FeatureMap<Scalar> heat;
  FeatureMap<Scalar> paf;
  if (tape != nullptr) {
    tape->heat.resize(spec_.heatmap_branch.size());
    tape->paf.resize(spec_.paf_branch.size());
  }
  for (std::size_t s = 0; s < spec_.heatmap_branch.size(); ++s) {
    FeatureMap<Scalar> stage_in = s == 0 ? features : nn::concat_channels<Scalar>({&features, &heat, &paf});
    FeatureMap<Scalar> next_heat =
        detail::run_ops(spec_.heatmap_branch[s], stage_in, tape ? &tape->heat[s] : nullptr, spec_.name);
    FeatureMap<Scalar> next_paf =
        detail::run_ops(spec_.paf_branch[s], stage_in, tape ? &tape->paf[s] : nullptr, spec_.name);
    if (next_heat.height != features.height || next_heat.width != features.width ||
        next_paf.height != features.height || next_paf.width != features.width) {
      throw WeightSchemaError(spec_.name + ": stage branches must preserve spatial size");
    }
    heat = std::move(next_heat);
    paf = std::move(next_paf);
    if (tape != nullptr) {
      tape->stage_heat_out.push_back(heat);
      tape->stage_paf_out.push_back(paf);
    }
  }
  if (tape != nullptr) tape->features = features;

  auto select = [](const FeatureMap<Scalar>& m, const std::vector<int>& keep) {
    if (keep.empty()) return m;
    FeatureMap<Scalar> out(static_cast<int>(keep.size()), m.height, m.width);
    for (std::size_t i = 0; i < keep.size(); ++i) out.data.row(static_cast<Eigen::Index>(i)) = m.data.row(keep[i]);
    return out;
  };
  return {select(heat, spec_.keep_heatmaps), select(paf, spec_.keep_pafs)};
}

template <typename Scalar>
PoseMaps<Scalar> StagedPoseNetwork<Scalar>::infer(const FeatureMap<Scalar>& image) const {
  return run(image, nullptr);
}

template <typename Scalar>
FeatureMap<Scalar> StagedPoseNetwork<Scalar>::input_gradient(const FeatureMap<Scalar>& image,
                                                             const PoseMaps<Scalar>& grad) const {
  Tape tape;
  run(image, &tape);
  const int stages = stage_count();
  const auto& last_heat = tape.stage_heat_out.back();
  const auto& last_paf = tape.stage_paf_out.back();

  auto expand = [](const FeatureMap<Scalar>& g, const std::vector<int>& keep, const FeatureMap<Scalar>& like) {
    if (keep.empty()) return g;
    FeatureMap<Scalar> out(like.channels(), like.height, like.width);
    for (std::size_t i = 0; i < keep.size(); ++i) out.data.row(keep[i]) += g.data.row(static_cast<Eigen::Index>(i));
    return out;
  };
  FeatureMap<Scalar> g_heat = expand(grad.heatmaps, spec_.keep_heatmaps, last_heat);
  FeatureMap<Scalar> g_paf = expand(grad.pafs, spec_.keep_pafs, last_paf);
  FeatureMap<Scalar> g_features(feature_channels_, tape.features.height, tape.features.width);

  for (int s = stages; s-- > 0;) {
    FeatureMap<Scalar> g_in = detail::run_ops_backward(spec_.heatmap_branch[s], tape.heat[s], g_heat);
    g_in.data += detail::run_ops_backward(spec_.paf_branch[s], tape.paf[s], g_paf).data;
    if (s == 0) {
      g_features.data += g_in.data;
    } else {
      g_features.data += g_in.data.topRows(feature_channels_);
      g_heat = nn::slice_channels(g_in, feature_channels_, raw_heatmaps_);
      g_paf = nn::slice_channels(g_in, feature_channels_ + raw_heatmaps_, raw_pafs_);
    }
  }
  FeatureMap<Scalar> g = detail::run_ops_backward(spec_.backbone, tape.backbone, g_features);
  g.data *= spec_.input_scale;
  return g;
}

// ---------------------------------------------------------------------------

struct MockOptions {
  std::uint64_t seed = 0;
  std::vector<int> hidden = {8, 16};
  double weight_gain = 1.0;
  double leaky_slope = 0.1;
};

/// Small fixed random stack: conv3x3 -> leaky -> conv3x3 -> leaky -> 2x2
/// average pool -> 1x1 heads (14 + 28). Output scale 1/2.
template <typename Scalar>
std::unique_ptr<StagedPoseNetwork<Scalar>> make_mock_adapter(const MockOptions& opt) {
  std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  auto conv = [&](const std::string& name, int in, int out, int k, int pad) {
    Op<Scalar> op;
    op.kind = OpKind::kConv;
    op.name = name;
    op.pad = pad;
    op.conv.kernel = k;
    op.conv.weight.resize(out, in * k * k);
    op.conv.bias.resize(out);
    const double bound = opt.weight_gain * std::sqrt(6.0 / (in * k * k));
    for (Eigen::Index i = 0; i < op.conv.weight.size(); ++i) op.conv.weight.data()[i] = static_cast<Scalar>(bound * dist(rng));
    for (Eigen::Index i = 0; i < op.conv.bias.size(); ++i) op.conv.bias[i] = static_cast<Scalar>(0.1 * dist(rng));
    return op;
  };
  auto leaky = [&] {
    Op<Scalar> op;
    op.kind = OpKind::kLeakyRelu;
    op.slope = static_cast<Scalar>(opt.leaky_slope);
    return op;
  };
  StagedNetworkSpec<Scalar> spec;
  spec.name = "mock-" + std::to_string(opt.seed);
  spec.backbone.push_back(conv("conv1", 3, opt.hidden[0], 3, 1));
  spec.backbone.push_back(leaky());
  spec.backbone.push_back(conv("conv2", opt.hidden[0], opt.hidden[1], 3, 1));
  spec.backbone.push_back(leaky());
  Op<Scalar> pool;
  pool.kind = OpKind::kAvgPool;
  pool.pool = 2;
  spec.backbone.push_back(pool);
  spec.heatmap_branch.push_back({conv("heatmaps", opt.hidden[1], kPartCount, 1, 0)});
  spec.paf_branch.push_back({conv("pafs", opt.hidden[1], kPafChannels, 1, 0)});
  return std::make_unique<StagedPoseNetwork<Scalar>>(std::move(spec));
}

template <typename Scalar>
std::unique_ptr<StagedPoseNetwork<Scalar>> make_mock_adapter(std::uint64_t seed) {
  MockOptions opt;
  opt.seed = seed;
  return make_mock_adapter<Scalar>(opt);
}

/// Serialized staged network (same container as PolishNet checkpoints). See
/// README for the manifest schema.
StagedNetworkSpec<float> spec_from_named_arrays(const NamedArrays& arrays);
NamedArrays to_named_arrays(const StagedNetworkSpec<float>& spec);

template <typename Scalar>
StagedNetworkSpec<Scalar> cast_spec(const StagedNetworkSpec<float>& spec) {
  auto cast_ops = [](const std::vector<Op<float>>& ops) {
    std::vector<Op<Scalar>> out;
    for (const auto& op : ops) {
      Op<Scalar> o;
      o.kind = op.kind;
      o.name = op.name;
      o.pad = op.pad;
      o.pool = op.pool;
      o.slope = static_cast<Scalar>(op.slope);
      o.conv.kernel = op.conv.kernel;
      o.conv.weight = op.conv.weight.template cast<Scalar>();
      o.conv.bias = op.conv.bias.template cast<Scalar>();
      out.push_back(std::move(o));
    }
    return out;
  };
  StagedNetworkSpec<Scalar> out;
  out.name = spec.name;
  out.input_offset = static_cast<Scalar>(spec.input_offset);
  out.input_scale = static_cast<Scalar>(spec.input_scale);
  out.backbone = cast_ops(spec.backbone);
  for (const auto& b : spec.heatmap_branch) out.heatmap_branch.push_back(cast_ops(b));
  for (const auto& b : spec.paf_branch) out.paf_branch.push_back(cast_ops(b));
  out.keep_heatmaps = spec.keep_heatmaps;
  out.keep_pafs = spec.keep_pafs;
  return out;
}

template <typename Scalar>
std::unique_ptr<StagedPoseNetwork<Scalar>> load_weights_adapter(const std::filesystem::path& path) {
  return std::make_unique<StagedPoseNetwork<Scalar>>(cast_spec<Scalar>(spec_from_named_arrays(load_named_arrays(path))));
}

/// Parses "mock", "mock:<seed>" or "weights:<path>".
template <typename Scalar>
std::unique_ptr<PoseAdapter<Scalar>> load_adapter(const std::string& spec) {
  if (spec == "mock") return make_mock_adapter<Scalar>(0);
  if (spec.rfind("mock:", 0) == 0) return make_mock_adapter<Scalar>(std::stoull(spec.substr(5)));
  if (spec.rfind("weights:", 0) == 0) return load_weights_adapter<Scalar>(spec.substr(8));
  throw ConfigError("unknown adapter spec: " + spec + " (expected mock[:seed] or weights:<path>)");
}

}  // namespace presspose::pose
