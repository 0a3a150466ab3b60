#pragma once

// Training protocols built on train() and the evaluation module: per-fold
// training under a subject split, and the pixel-weight sweep.

#include <string>
#include <vector>

#include "presspose/evaluation.hpp"
#include "presspose/split.hpp"
#include "presspose/training.hpp"

namespace presspose::train {

struct RunSetup {
  polish::PolishNetConfig polish;
  std::uint64_t init_seed = 0;
  TrainConfig train;
  LossWeights weights;
  TargetSettings targets;
  double peak_threshold = targets::kDefaultPeakThreshold;
};

/// Average AUC of polish + adapter on `samples`; the early-stopping score.
ScoreFn<float> auc_score(const pose::PoseAdapter<float>& adapter, std::vector<Sample> samples,
                         double threshold = targets::kDefaultPeakThreshold);

/// Trains from freshly initialized parameters. With a non-empty `validation`
/// set and train.eval_every > 0, stops early on its AUC.
TrainResult<float> run_training(const RunSetup& setup, const pose::PoseAdapter<float>& adapter,
                                const std::vector<Sample>& train_set, const std::vector<Sample>& validation = {});

struct FoldTraining {
  int test_subject = 0;
  TrainResult<float> result;
};

/// One model per fold, trained on the fold's training subjects with early
/// stopping on the holdout subjects.
std::vector<FoldTraining> train_folds(const RunSetup& setup, const pose::PoseAdapter<float>& adapter,
                                      const std::vector<Sample>& dataset, const split::SplitPlan& plan);

struct SweepRow {
  double lambda_pixel = 0.0;
  double train_auc = 0.0;
  double test_auc = 0.0;
  double final_pixel = 0.0;  // eval-mode pixel term summed over the training set
  double final_total = 0.0;  // eval-mode objective over the training set
  int iterations = 0;
};

/// One training run and evaluation per value of the pixel weight; every run
/// starts from the same initialization.
std::vector<SweepRow> lambda_sweep(const std::vector<double>& values, const RunSetup& setup,
                                   const pose::PoseAdapter<float>& adapter, const std::vector<Sample>& train_set,
                                   const std::vector<Sample>& test_set,
                                   std::vector<polish::PolishNetParams<float>>* trained = nullptr);

std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace presspose::train
