#include <fstream>
#include <sstream>

#include "presspose/experiments.hpp"

namespace presspose::train {

std::string LossTrace::to_csv() const {
  std::ostringstream out;
  out << "iteration,lr,E_heatmap,E_PAF,E_pixel,E_total\n";
  out.precision(17);
  for (const auto& r : records) {
    out << r.iteration << ',' << r.lr << ',' << r.parts.heatmap << ',' << r.parts.paf << ',' << r.parts.pixel << ','
        << r.total << '\n';
  }
  return out.str();
}

void LossTrace::save_csv(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  out << to_csv();
  if (!out) throw IOError("cannot write " + path.string());
}

ScoreFn<float> auc_score(const pose::PoseAdapter<float>& adapter, std::vector<Sample> samples, double threshold) {
  return [&adapter, samples = std::move(samples), threshold](const polish::PolishNetParams<float>& params) {
    const auto stage = eval::polish_stage(params);
    std::vector<KeypointSet> pred;
    std::vector<KeypointSet> gt;
    for (const auto& s : samples) {
      pred.push_back(eval::predict(adapter, s.image, stage, threshold).keypoints);
      gt.push_back(s.keypoints);
    }
    return eval::average_auc(eval::pck(pred, gt));
  };
}

TrainResult<float> run_training(const RunSetup& setup, const pose::PoseAdapter<float>& adapter,
                                const std::vector<Sample>& train_set, const std::vector<Sample>& validation) {
  auto params = polish::init_params<float>(setup.polish, setup.init_seed);
  ScoreFn<float> score;
  if (!validation.empty() && setup.train.eval_every > 0) score = auc_score(adapter, validation, setup.peak_threshold);
  return train(std::move(params), adapter, train_set, setup.train, setup.weights, setup.targets, score);
}

std::vector<FoldTraining> train_folds(const RunSetup& setup, const pose::PoseAdapter<float>& adapter,
                                      const std::vector<Sample>& dataset, const split::SplitPlan& plan) {
  const auto validation = data::filter_subjects(dataset, plan.holdout_validation_subjects);
  std::vector<FoldTraining> out;
  for (const auto& fold : plan.folds) {
    const auto train_set = data::filter_subjects(dataset, fold.train_subjects);
    if (train_set.empty()) {
      throw ConfigError("train: fold testing subject " + std::to_string(fold.test_subject) + " has no training frames");
    }
    out.push_back({fold.test_subject, run_training(setup, adapter, train_set, validation)});
  }
  return out;
}

std::vector<SweepRow> lambda_sweep(const std::vector<double>& values, const RunSetup& setup,
                                   const pose::PoseAdapter<float>& adapter, const std::vector<Sample>& train_set,
                                   const std::vector<Sample>& test_set,
                                   std::vector<polish::PolishNetParams<float>>* trained) {
  for (double v : values)
    if (!(v > 0.0)) throw ConfigError("lambda_sweep: values must be positive");
  const auto prepared = prepare_samples(train_set, adapter, setup.targets);
  std::vector<SweepRow> rows;
  for (double v : values) {
    RunSetup run = setup;
    run.weights.pixel = v;
    auto result = run_training(run, adapter, train_set);
    SweepRow row;
    row.lambda_pixel = v;
    row.iterations = result.iterations;
    row.train_auc = auc_score(adapter, train_set, setup.peak_threshold)(result.params);
    row.test_auc = test_set.empty() ? 0.0 : auc_score(adapter, test_set, setup.peak_threshold)(result.params);
    const LossParts parts = eval_objective(result.params, adapter, prepared, run.weights);
    row.final_pixel = parts.pixel;
    row.final_total = total_loss(parts, run.weights);
    rows.push_back(row);
    if (trained != nullptr) trained->push_back(std::move(result.params));
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "lambda_pixel,train_auc,test_auc,final_E_pixel,final_E_total,iterations\n";
  out.precision(10);
  for (const auto& r : rows) {
    out << r.lambda_pixel << ',' << eval::format_number(r.train_auc) << ',' << eval::format_number(r.test_auc) << ','
        << r.final_pixel << ',' << r.final_total << ',' << r.iterations << '\n';
  }
  return out.str();
}

}  // namespace presspose::train
