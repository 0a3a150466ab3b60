#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "presspose/evaluation.hpp"

using namespace presspose;
using namespace presspose::eval;

namespace {

const int kLS = index_of(Part::kLShoulder);
const int kRH = index_of(Part::kRHip);

/// Ground truth with a visible, non-zero torso and predictions near it.
std::pair<std::vector<KeypointSet>, std::vector<KeypointSet>> random_frames(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> noise(0.0, 6.0);
  std::bernoulli_distribution drop(0.15);
  std::vector<KeypointSet> pred;
  std::vector<KeypointSet> gt;
  for (int i = 0; i < n; ++i) {
    auto g = testkit::random_keypoints(rng, {64, 32}, 0.85, true);
    g.frame.timestamp_index = i;
    auto p = g;
    for (int k = 0; k < kPartCount; ++k) {
      p.points[k] += Eigen::Vector2d(std::round(noise(rng)), std::round(noise(rng)));
      p.visible[k] = !drop(rng);
    }
    gt.push_back(g);
    pred.push_back(p);
  }
  return {pred, gt};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

TEST(Evaluation, PckMatchesOracle) {
  std::mt19937_64 rng(81);
  const auto thresholds = default_thresholds();
  for (int fixture = 0; fixture < 20; ++fixture) {
    const auto [pred, gt] = random_frames(rng, 12);
    const auto r = pck(pred, gt);
    const auto o = testkit::pck_oracle(pred, gt, thresholds);
    for (int k = 0; k < kPartCount; ++k) {
      ASSERT_EQ(r.curves[k].true_positives, o.hits[k]);
      ASSERT_EQ(r.curves[k].visible_count, o.visible[k]);
      ASSERT_NEAR(auc(r.curves[k]), testkit::auc_oracle(o.hits[k], o.visible[k]), 1e-9);
    }
  }
}

TEST(Evaluation, ThresholdGrid) {
  const auto t = default_thresholds();
  ASSERT_EQ(t.size(), 100u);
  EXPECT_DOUBLE_EQ(t.front(), 0.01);
  EXPECT_DOUBLE_EQ(t.back(), 1.0);
}

TEST(Evaluation, PerfectPredictionsScoreHundred) {
  std::mt19937_64 rng(82);
  auto [pred, gt] = random_frames(rng, 10);
  for (auto& g : gt) {
    g.visible[kLS] = g.visible[kRH] = true;
    g.points[kRH] = g.points[kLS] + Eigen::Vector2d(3, 9);
  }
  const auto r = pck(gt, gt);
  for (const auto& c : r.curves)
    if (!c.no_instances) EXPECT_DOUBLE_EQ(auc(c), 100.0);
  EXPECT_DOUBLE_EQ(average_auc(r), 100.0);
}

TEST(Evaluation, ExcludedAndDegenerateFrames) {
  KeypointSet good;
  good.visible.fill(true);
  for (int k = 0; k < kPartCount; ++k) good.points[k] = Eigen::Vector2d(k, 2 * k);
  good.frame.timestamp_index = 0;
  KeypointSet hidden = good;
  hidden.visible[kLS] = false;
  hidden.frame.timestamp_index = 1;
  KeypointSet flat = good;
  flat.points[kRH] = flat.points[kLS];
  flat.frame.timestamp_index = 2;
  EXPECT_THROW(torso_length(hidden), ReferenceUnavailableError);
  EXPECT_DOUBLE_EQ(torso_length(flat), 0.0);
  const auto r = pck({good, hidden, flat}, {good, hidden, flat});
  EXPECT_EQ(r.frames_used, 1u);
  ASSERT_EQ(r.excluded.size(), 1u);
  EXPECT_EQ(r.excluded[0].timestamp_index, 1);
  ASSERT_EQ(r.degenerate.size(), 1u);
  EXPECT_EQ(r.degenerate[0].timestamp_index, 2);
  EXPECT_EQ(r.curves[0].visible_count, 1u);
}

TEST(Evaluation, InvisiblePredictionIsMissAndInvisibleTruthIsSkipped) {
  KeypointSet gt;
  gt.visible.fill(true);
  for (int k = 0; k < kPartCount; ++k) gt.points[k] = Eigen::Vector2d(k, 3 * k);
  gt.visible[0] = false;
  KeypointSet pred = gt;
  pred.visible[1] = false;
  const auto r = pck({pred}, {gt});
  EXPECT_TRUE(r.curves[0].no_instances);
  EXPECT_EQ(r.curves[1].visible_count, 1u);
  EXPECT_DOUBLE_EQ(auc(r.curves[1]), 0.0);
  EXPECT_DOUBLE_EQ(auc(r.curves[2]), 100.0);
  // part 0 has no instances and is left out of the average
  EXPECT_NEAR(average_auc(r), 100.0 * 12.0 / 13.0, 1e-12);
}

TEST(Evaluation, CurvesAreMonotoneAndAverageDecomposes) {
  std::mt19937_64 rng(83);
  const auto [pred, gt] = random_frames(rng, 30);
  const auto r = pck(pred, gt);
  double sum = 0.0;
  int n = 0;
  for (const auto& c : r.curves) {
    EXPECT_TRUE(std::is_sorted(c.detection_rate.begin(), c.detection_rate.end()));
    if (c.no_instances) continue;
    sum += auc(c);
    ++n;
  }
  EXPECT_NEAR(average_auc(r), sum / n, 1e-12);
  EXPECT_THROW(pck(pred, {}), ShapeError);
}

TEST(Evaluation, MeanAndSampleStd) {
  const auto [m, s] = mean_std({2, 4, 4, 4, 5, 5, 7, 9});
  EXPECT_DOUBLE_EQ(m, 5.0);
  EXPECT_NEAR(s, std::sqrt(32.0 / 7.0), 1e-12);
  EXPECT_EQ(mean_std({3.0}), std::make_pair(3.0, 0.0));
}

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dataset = testkit::synthetic_samples({64, 32}, 4, 2);
    plan = split::per_subject_plan({1, 2, 3, 4});
  }
  std::unique_ptr<pose::StagedPoseNetwork<float>> adapter = pose::make_mock_adapter<float>(3);
  std::vector<data::Sample> dataset;
  split::SplitPlan plan;
};

TEST_F(PipelineTest, IdentityPolishMatchesAdapterOnly) {
  const PolishFn identity = [](const ColorImage& im) { return im; };
  const auto r = evaluate_variants({{"a", adapter.get(), {}, ""}, {"b", adapter.get(), {identity}, ""}}, dataset, plan,
                                   0.0);
  ASSERT_EQ(r.variants.size(), 2u);
  EXPECT_EQ(r.variants[0].average_mean, r.variants[1].average_mean);
  EXPECT_EQ(r.variants[0].auc_mean, r.variants[1].auc_mean);
  EXPECT_TRUE(r.variants[1].polished);
  EXPECT_EQ(r.variants[0].folds.size(), 4u);
}

TEST_F(PipelineTest, FoldStatisticsAreAcrossFolds) {
  const auto r = evaluate_pipeline({}, *adapter, dataset, plan, 0.0);
  std::vector<double> averages;
  for (const auto& f : r.variants[0].folds) averages.push_back(f.average);
  const auto [m, s] = mean_std(averages);
  EXPECT_DOUBLE_EQ(r.variants[0].average_mean, m);
  EXPECT_DOUBLE_EQ(r.variants[0].average_std, s);
}

TEST_F(PipelineTest, ReportsAreDeterministicAndParse) {
  polish::PolishNetConfig c;
  c.channel_widths = {2, 3, 4};
  c.working_size = {64, 32};
  const auto p = polish::init_params<float>(c, 0);
  const auto r1 = compare_adapters({p}, *adapter, {p}, *pose::make_mock_adapter<float>(4), dataset, plan, 0.0);
  const auto r2 = compare_adapters({p}, *adapter, {p}, *pose::make_mock_adapter<float>(4), dataset, plan, 0.0);
  ASSERT_EQ(r1.variants.size(), 4u);
  EXPECT_EQ(report_csv(r1), report_csv(r2));
  EXPECT_EQ(report_markdown(r1), report_markdown(r2));
  EXPECT_EQ(report_plot_data(r1), report_plot_data(r2));

  std::stringstream csv(report_csv(r1));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "variant,adapter,polished,part,auc_mean,auc_std,folds,visible_count");
  int rows = 0;
  while (std::getline(csv, line)) {
    const auto cells = split_line(line);
    ASSERT_EQ(cells.size(), 8u) << line;
    const auto& v = r1.variants[rows / (kPartCount + 1)];
    const int part = rows % (kPartCount + 1);
    EXPECT_EQ(cells[0], v.label);
    if (part == kPartCount) {
      EXPECT_EQ(cells[3], "average");
      EXPECT_NEAR(std::stod(cells[4]), v.average_mean, 1e-6);
    } else {
      EXPECT_EQ(cells[3], part_name(part));
      EXPECT_NEAR(std::stod(cells[4]), v.auc_mean[part], 1e-6);
    }
    ++rows;
  }
  EXPECT_EQ(rows, 4 * (kPartCount + 1));

  const auto md = report_markdown(r1);
  for (const auto& v : r1.variants) EXPECT_NE(md.find(std::string("\n## ") + v.label + " (" + v.adapter + ")"), std::string::npos);
  EXPECT_NE(md.find("| head |"), std::string::npos);
  EXPECT_NE(md.find("**" + std::string(part_name(kPartCount / 2)) + "**"), std::string::npos);
}

TEST_F(PipelineTest, EmitReportWritesFilesOrThrows) {
  const auto r = evaluate_pipeline({}, *adapter, dataset, plan, 0.0);
  const auto dir = std::filesystem::temp_directory_path() / ("presspose_report_" + std::to_string(::getpid()));
  const auto written = emit_report(r, dir);
  EXPECT_EQ(written.size(), 4u);
  EXPECT_EQ(slurp(dir / "report.csv"), report_csv(r));
  EXPECT_EQ(slurp(dir / "report.md"), report_markdown(r));
  std::ofstream(dir / "blocker") << "x";
  EXPECT_THROW(emit_report(r, dir / "blocker" / "sub"), IOError);
  std::filesystem::remove_all(dir);
}

TEST(Evaluation, ColormapBenchmarkRanksRedRampFirst) {
  const auto adapter = testkit::probe_adapter();
  const auto maps = testkit::benchmark_maps();
  const auto table = colormap_benchmark(*adapter, testkit::blob_frames(6), maps, testkit::kBlobWorkingSize, 0.0);
  ASSERT_EQ(table.size(), maps.size());
  EXPECT_EQ(table.front().name, "red_ramp");
  EXPECT_GT(table[0].average_auc, table[1].average_auc);
  // every part but the right hip is exact; the hip sits a full torso away
  EXPECT_NEAR(table[0].average_auc, 100.0 * 13.0 / 14.0, 1e-9);
  for (std::size_t i = 1; i < table.size(); ++i) EXPECT_GE(table[i - 1].average_auc, table[i].average_auc);
}
