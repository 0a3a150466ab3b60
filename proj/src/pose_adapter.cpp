#include "presspose/pose_adapter.hpp"

namespace presspose::pose {

namespace {

Op<float> op_from_json(const nlohmann::json& j, const NamedArrays& arrays) {
  Op<float> op;
  const auto kind = j.at("op").get<std::string>();
  if (kind == "conv") {
    op.kind = OpKind::kConv;
    op.name = j.at("name").get<std::string>();
    op.pad = j.value("pad", 0);
    const auto& w = arrays.at(op.name + ".weight");
    if (w.shape.size() != 4 || w.shape[2] != w.shape[3]) {
      throw WeightSchemaError(op.name + ".weight: expected shape [out, in, k, k]");
    }
    const auto out = static_cast<Eigen::Index>(w.shape[0]);
    const auto cols = static_cast<Eigen::Index>(w.shape[1] * w.shape[2] * w.shape[3]);
    op.conv.kernel = static_cast<int>(w.shape[2]);
    op.conv.weight = Eigen::Map<const Planes<float>>(w.values.data(), out, cols);
    const auto& b = arrays.at(op.name + ".bias");
    if (b.element_count() != out) throw WeightSchemaError(op.name + ".bias: expected " + std::to_string(out) + " values");
    op.conv.bias = Eigen::Map<const Vector<float>>(b.values.data(), out);
  } else if (kind == "relu") {
    op.kind = OpKind::kRelu;
  } else if (kind == "leaky_relu") {
    op.kind = OpKind::kLeakyRelu;
    op.slope = j.value("slope", 0.1f);
  } else if (kind == "maxpool" || kind == "avgpool") {
    op.kind = kind == "maxpool" ? OpKind::kMaxPool : OpKind::kAvgPool;
    op.pool = j.value("size", 2);
  } else {
    throw WeightSchemaError("unknown layer op: " + kind);
  }
  return op;
}

nlohmann::json op_to_json(const Op<float>& op, NamedArrays& arrays) {
  switch (op.kind) {
    case OpKind::kConv: {
      const std::int64_t k = op.conv.kernel;
      arrays.put(op.name + ".weight", {op.conv.weight.rows(), op.conv.weight.cols() / (k * k), k, k},
                 std::vector<float>(op.conv.weight.data(), op.conv.weight.data() + op.conv.weight.size()));
      arrays.put(op.name + ".bias", {op.conv.bias.size()},
                 std::vector<float>(op.conv.bias.data(), op.conv.bias.data() + op.conv.bias.size()));
      return {{"op", "conv"}, {"name", op.name}, {"pad", op.pad}};
    }
    case OpKind::kRelu:
      return {{"op", "relu"}};
    case OpKind::kLeakyRelu:
      return {{"op", "leaky_relu"}, {"slope", op.slope}};
    case OpKind::kMaxPool:
      return {{"op", "maxpool"}, {"size", op.pool}};
    case OpKind::kAvgPool:
      return {{"op", "avgpool"}, {"size", op.pool}};
  }
  return {};
}

std::vector<Op<float>> ops_from_json(const nlohmann::json& list, const NamedArrays& arrays) {
  std::vector<Op<float>> ops;
  for (const auto& j : list) ops.push_back(op_from_json(j, arrays));
  return ops;
}

nlohmann::json ops_to_json(const std::vector<Op<float>>& ops, NamedArrays& arrays) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& op : ops) list.push_back(op_to_json(op, arrays));
  return list;
}

}  // namespace

StagedNetworkSpec<float> spec_from_named_arrays(const NamedArrays& arrays) {
  const auto& m = arrays.meta;
  if (m.value("kind", "") != "pose_adapter") throw WeightSchemaError("weights file: not a pose adapter container");
  StagedNetworkSpec<float> spec;
  try {
    spec.name = m.value("name", "weights");
    spec.input_offset = m.value("input_offset", 0.5f);
    spec.input_scale = m.value("input_scale", 1.0f);
    spec.backbone = ops_from_json(m.at("backbone"), arrays);
    for (const auto& stage : m.at("heatmap_branch")) spec.heatmap_branch.push_back(ops_from_json(stage, arrays));
    for (const auto& stage : m.at("paf_branch")) spec.paf_branch.push_back(ops_from_json(stage, arrays));
    spec.keep_heatmaps = m.value("keep_heatmaps", std::vector<int>{});
    spec.keep_pafs = m.value("keep_pafs", std::vector<int>{});
    const int stages = m.value("stages", static_cast<int>(spec.heatmap_branch.size()));
    if (stages != static_cast<int>(spec.heatmap_branch.size())) {
      throw WeightSchemaError("weights file: manifest declares " + std::to_string(stages) + " stages, found " +
                              std::to_string(spec.heatmap_branch.size()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw WeightSchemaError(std::string("weights file manifest: ") + e.what());
  }
  if (m.contains("output_scale")) {
    const StagedPoseNetwork<float> probe(spec);
    if (std::abs(probe.output_scale() - m.at("output_scale").get<double>()) > 1e-12) {
      throw WeightSchemaError("weights file: declared output_scale does not match pooling layers");
    }
  }
  return spec;
}

NamedArrays to_named_arrays(const StagedNetworkSpec<float>& spec) {
  NamedArrays arrays;
  nlohmann::json heat = nlohmann::json::array();
  nlohmann::json paf = nlohmann::json::array();
  for (const auto& b : spec.heatmap_branch) heat.push_back(ops_to_json(b, arrays));
  for (const auto& b : spec.paf_branch) paf.push_back(ops_to_json(b, arrays));
  const StagedPoseNetwork<float> probe(spec);
  arrays.meta = {{"kind", "pose_adapter"},
                 {"name", spec.name},
                 {"stages", spec.heatmap_branch.size()},
                 {"output_scale", probe.output_scale()},
                 {"input_offset", spec.input_offset},
                 {"input_scale", spec.input_scale},
                 {"backbone", ops_to_json(spec.backbone, arrays)},
                 {"heatmap_branch", heat},
                 {"paf_branch", paf},
                 {"keep_heatmaps", spec.keep_heatmaps},
                 {"keep_pafs", spec.keep_pafs}};
  return arrays;
}

}  // namespace presspose::pose
