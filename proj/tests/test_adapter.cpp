#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <numeric>

#include "oracles.hpp"
#include "presspose/pose_adapter.hpp"

using namespace presspose;
using namespace presspose::pose;

namespace {

template <typename Scalar>
Op<Scalar> conv_op(std::mt19937_64& rng, const std::string& name, int in, int out, int k, int pad) {
  std::normal_distribution<double> n(0.0, 1.0 / std::sqrt(in * k * k));
  Op<Scalar> op;
  op.kind = OpKind::kConv;
  op.name = name;
  op.pad = pad;
  op.conv = {k, Planes<Scalar>(out, in * k * k), Vector<Scalar>(out)};
  for (Eigen::Index i = 0; i < op.conv.weight.size(); ++i) op.conv.weight.data()[i] = static_cast<Scalar>(n(rng));
  for (Eigen::Index i = 0; i < op.conv.bias.size(); ++i) op.conv.bias[i] = static_cast<Scalar>(n(rng));
  return op;
}

template <typename Scalar>
Op<Scalar> simple_op(OpKind kind) {
  Op<Scalar> op;
  op.kind = kind;
  op.slope = static_cast<Scalar>(0.2);
  return op;
}

/// Two stages, max pooling, and an extra heatmap channel that is dropped.
template <typename Scalar>
StagedNetworkSpec<Scalar> two_stage_spec(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  StagedNetworkSpec<Scalar> s;
  s.name = "two-stage";
  s.input_scale = static_cast<Scalar>(2);
  s.backbone = {conv_op<Scalar>(rng, "b1", 3, 4, 3, 1), simple_op<Scalar>(OpKind::kLeakyRelu),
                simple_op<Scalar>(OpKind::kMaxPool)};
  s.heatmap_branch.push_back({conv_op<Scalar>(rng, "h1", 4, kPartCount + 1, 1, 0)});
  s.paf_branch.push_back({conv_op<Scalar>(rng, "p1", 4, kPafChannels, 1, 0)});
  const int in2 = 4 + kPartCount + 1 + kPafChannels;
  s.heatmap_branch.push_back({conv_op<Scalar>(rng, "h2a", in2, 6, 3, 1), simple_op<Scalar>(OpKind::kRelu),
                              conv_op<Scalar>(rng, "h2b", 6, kPartCount + 1, 1, 0)});
  s.paf_branch.push_back({conv_op<Scalar>(rng, "p2", in2, kPafChannels, 3, 1)});
  s.keep_heatmaps.resize(kPartCount);
  std::iota(s.keep_heatmaps.begin(), s.keep_heatmaps.end(), 0);
  return s;
}

FeatureMap<double> random_map(std::mt19937_64& rng, int c, int h, int w) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  FeatureMap<double> m(c, h, w);
  for (Eigen::Index i = 0; i < m.data.size(); ++i) m.data.data()[i] = u(rng);
  return m;
}

double max_input_gradient_error(const PoseAdapter<double>& adapter, std::uint64_t seed, ImageSize size) {
  std::mt19937_64 rng(seed);
  const auto image = random_map(rng, 3, size.height, size.width);
  const ImageSize out = adapter.output_size(size);
  const PoseMaps<double> r{random_map(rng, kPartCount, out.height, out.width),
                           random_map(rng, kPafChannels, out.height, out.width)};
  auto objective = [&](const FeatureMap<double>& im) {
    const auto maps = adapter.infer(im);
    return (maps.heatmaps.data.array() * r.heatmaps.data.array()).sum() +
           (maps.pafs.data.array() * r.pafs.data.array()).sum();
  };
  const auto g = adapter.input_gradient(image, r);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < image.data.size(); ++i) {
    auto plus = image;
    auto minus = image;
    plus.data.data()[i] += 1e-6;
    minus.data.data()[i] -= 1e-6;
    const double fd = (objective(plus) - objective(minus)) / 2e-6;
    worst = std::max(worst, std::abs(fd - g.data.data()[i]) / std::max(1.0, std::abs(fd)));
  }
  return worst;
}

}  // namespace

TEST(Adapter, MockShapesAndName) {
  const auto a = make_mock_adapter<float>(3);
  EXPECT_EQ(a->name(), "mock-3");
  EXPECT_DOUBLE_EQ(a->output_scale(), 0.5);
  EXPECT_EQ(a->output_size({28, 20}), (ImageSize{14, 10}));
  const auto maps = a->infer(ColorImage(3, 28, 20));
  EXPECT_EQ(maps.heatmaps.channels(), kPartCount);
  EXPECT_EQ(maps.pafs.channels(), kPafChannels);
  EXPECT_EQ(maps.heatmaps.height, 14);
  EXPECT_THROW(a->infer(ColorImage(1, 28, 20)), ShapeError);
}

TEST(Adapter, MockInputGradientMatchesFiniteDifferences) {
  MockOptions o;
  o.seed = 5;
  o.hidden = {4, 6};
  const auto a = make_mock_adapter<double>(o);
  EXPECT_LT(max_input_gradient_error(*a, 61, {12, 10}), 1e-6);
}

TEST(Adapter, StagedInputGradientMatchesFiniteDifferences) {
  const StagedPoseNetwork<double> a(two_stage_spec<double>(62));
  EXPECT_DOUBLE_EQ(a.output_scale(), 0.5);
  EXPECT_EQ(a.stage_count(), 2);
  EXPECT_LT(max_input_gradient_error(a, 63, {10, 8}), 1e-6);
}

TEST(Adapter, ChecksumIsStableAndSeedDependent) {
  const auto a = make_mock_adapter<float>(1);
  const auto first = a->checksum();
  a->infer(ColorImage(3, 8, 8));
  EXPECT_EQ(a->checksum(), first);
  EXPECT_NE(make_mock_adapter<float>(2)->checksum(), first);
  EXPECT_EQ(make_mock_adapter<float>(1)->checksum(), first);
}

TEST(Adapter, NamedArraysRoundTrip) {
  const auto spec = two_stage_spec<float>(64);
  const StagedPoseNetwork<float> a(spec);
  const auto path =
      std::filesystem::temp_directory_path() / ("presspose_adapter_" + std::to_string(::getpid()) + ".ppna");
  save_named_arrays(to_named_arrays(spec), path);
  const auto b = load_adapter<float>("weights:" + path.string());
  EXPECT_EQ(b->name(), a.name());
  EXPECT_EQ(b->checksum(), a.checksum());
  std::mt19937_64 rng(65);
  const ColorImage img = random_map(rng, 3, 10, 8).cast<float>();
  EXPECT_EQ(b->infer(img).heatmaps.data, a.infer(img).heatmaps.data);
  EXPECT_EQ(b->infer(img).pafs.data, a.infer(img).pafs.data);
  std::filesystem::remove(path);
}

TEST(Adapter, SchemaErrors) {
  auto spec = two_stage_spec<float>(66);
  spec.keep_heatmaps.pop_back();
  EXPECT_THROW(StagedPoseNetwork<float>{spec}, WeightSchemaError);
  spec = two_stage_spec<float>(66);
  std::mt19937_64 rng(1);
  spec.backbone.push_back(conv_op<float>(rng, "extra", 5, 4, 1, 0));
  EXPECT_THROW(StagedPoseNetwork<float>{spec}, WeightSchemaError);
  spec = two_stage_spec<float>(66);
  spec.paf_branch.pop_back();
  EXPECT_THROW(StagedPoseNetwork<float>{spec}, WeightSchemaError);
  NamedArrays other;
  other.meta = {{"kind", "polishnet"}};
  EXPECT_THROW(spec_from_named_arrays(other), WeightSchemaError);
}

TEST(Adapter, LoadAdapterSpecs) {
  EXPECT_EQ(load_adapter<float>("mock")->name(), "mock-0");
  EXPECT_EQ(load_adapter<float>("mock:12")->name(), "mock-12");
  EXPECT_THROW(load_adapter<float>("resnet"), ConfigError);
  EXPECT_THROW(load_adapter<float>("weights:/nonexistent/file.ppna"), IOError);
}
