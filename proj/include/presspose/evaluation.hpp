#pragma once

// PCK curves normalized by torso length (left shoulder to right hip), AUC,
// colormap benchmarking, cross-validated pipeline evaluation and report
// emission.

#include <nlohmann/json.hpp>

#include <array>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "presspose/colormap.hpp"
#include "presspose/dataset.hpp"
#include "presspose/polishnet.hpp"
#include "presspose/pose_adapter.hpp"
#include "presspose/skeleton.hpp"
#include "presspose/split.hpp"
#include "presspose/targets.hpp"

namespace presspose::eval {

/// 0.01, 0.02, ..., 1.00.
std::vector<double> default_thresholds();

/// Distance between the ground-truth left shoulder and right hip. Throws
/// ReferenceUnavailableError when either is invisible.
double torso_length(const KeypointSet& gt);

struct PCKCurve {
  int part = 0;
  std::vector<double> thresholds;
  std::vector<std::size_t> true_positives;  // per threshold
  std::vector<double> detection_rate;       // true_positives / visible_count; 0 when no instances
  std::size_t visible_count = 0;
  bool no_instances = false;
};

struct PckResult {
  std::array<PCKCurve, kPartCount> curves;
  std::vector<FrameRef> excluded;    // torso reference unavailable
  std::vector<FrameRef> degenerate;  // torso length zero
  std::size_t frames_used = 0;
};

/// A part counts as detected at threshold t when the prediction is visible
/// and strictly closer than t * torso_length to the ground truth. Invisible
/// ground-truth parts are left out of both counts. Frames without a usable
/// torso are skipped and listed.
PckResult pck(const std::vector<KeypointSet>& pred, const std::vector<KeypointSet>& gt,
              const std::vector<double>& thresholds = default_thresholds());

/// Mean detection rate over the threshold grid, times 100.
double auc(const PCKCurve& curve);

/// Mean AUC over parts that have at least one visible instance.
double average_auc(const PckResult& result);

/// Stage applied before the adapter; identity when absent.
using PolishFn = std::function<ColorImage(const ColorImage&)>;

/// Eval-mode PolishNet as a polish stage.
PolishFn polish_stage(polish::PolishNetParams<float> params);

/// Decoded keypoints in working-resolution pixels.
targets::DecodedPose predict(const pose::PoseAdapter<float>& adapter, const ColorImage& image,
                             const PolishFn& polish = {}, double threshold = targets::kDefaultPeakThreshold);

struct ColormapScore {
  std::string name;
  double average_auc = 0.0;
};

/// Colorize -> adapter -> decode -> PCK for each map; no polish stage.
/// Sorted by score, descending; ties keep input order.
std::vector<ColormapScore> colormap_benchmark(const pose::PoseAdapter<float>& adapter,
                                              const std::vector<data::LabeledFrame>& frames,
                                              const std::vector<data::Colormap>& maps, ImageSize working,
                                              double threshold = targets::kDefaultPeakThreshold);

/// One row of the comparison: an adapter, optionally preceded by a polish
/// stage. `polish` holds nothing, one stage shared by all folds, or one
/// stage per fold.
struct Variant {
  std::string label;
  const pose::PoseAdapter<float>* adapter = nullptr;
  std::vector<PolishFn> polish;
  std::string checkpoint;  // metadata only
};

struct FoldResult {
  int test_subject = 0;
  std::array<double, kPartCount> auc{};
  std::array<bool, kPartCount> has_instances{};
  double average = 0.0;
  std::size_t frames = 0;
  std::vector<FrameRef> excluded;
};

struct VariantReport {
  std::string label;
  std::string adapter;
  std::string checkpoint;
  bool polished = false;
  std::vector<FoldResult> folds;
  PckResult pooled;  // all test frames of all folds
  std::array<double, kPartCount> auc_mean{};
  std::array<double, kPartCount> auc_std{};
  double average_mean = 0.0;
  double average_std = 0.0;
};

struct EvalReport {
  std::vector<double> thresholds;
  std::vector<VariantReport> variants;
  nlohmann::json metadata = nlohmann::json::object();
};

/// Mean and sample standard deviation (n - 1; zero for a single value).
std::pair<double, double> mean_std(const std::vector<double>& values);

/// Runs each variant on the test subject of every fold. Means and standard
/// deviations are taken across folds.
EvalReport evaluate_variants(const std::vector<Variant>& variants, const std::vector<data::Sample>& dataset,
                             const split::SplitPlan& plan, double threshold = targets::kDefaultPeakThreshold);

/// Adapter alone and, when `polish` is given, polish + adapter.
EvalReport evaluate_pipeline(const std::vector<polish::PolishNetParams<float>>& polish,
                             const pose::PoseAdapter<float>& adapter, const std::vector<data::Sample>& dataset,
                             const split::SplitPlan& plan, double threshold = targets::kDefaultPeakThreshold);

/// Four rows: first adapter alone, polish + first, second alone, polish + second.
EvalReport compare_adapters(const std::vector<polish::PolishNetParams<float>>& polish_first,
                            const pose::PoseAdapter<float>& first,
                            const std::vector<polish::PolishNetParams<float>>& polish_second,
                            const pose::PoseAdapter<float>& second, const std::vector<data::Sample>& dataset,
                            const split::SplitPlan& plan, double threshold = targets::kDefaultPeakThreshold);

enum class ReportFormat { kCsv, kMarkdown, kPlotData };

std::string report_csv(const EvalReport& report);
std::string report_fold_csv(const EvalReport& report);
std::string report_markdown(const EvalReport& report);
std::string report_plot_data(const EvalReport& report);

/// Writes report.csv (+ folds.csv), report.md and pck_curves.csv into `dir`.
/// Returns the written paths.
std::vector<std::filesystem::path> emit_report(const EvalReport& report, const std::filesystem::path& dir,
                                               const std::vector<ReportFormat>& formats = {
                                                   ReportFormat::kCsv, ReportFormat::kMarkdown,
                                                   ReportFormat::kPlotData});

/// Fixed-precision number formatting used by every report.
std::string format_number(double v, int precision = 6);

}  // namespace presspose::eval
