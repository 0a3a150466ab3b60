#include "presspose/split.hpp"

#include <algorithm>
#include <random>

#include "presspose/errors.hpp"

namespace presspose::split {

std::vector<int> SplitPlan::cross_validation_subjects() const {
  std::vector<int> out;
  for (const auto& f : folds) out.push_back(f.test_subject);
  return out;
}

nlohmann::json SplitPlan::to_json() const {
  nlohmann::json folds_json = nlohmann::json::array();
  for (const auto& f : folds) folds_json.push_back({{"test_subject", f.test_subject}, {"train_subjects", f.train_subjects}});
  return {{"holdout_validation_subjects", holdout_validation_subjects}, {"folds", folds_json}};
}

SplitPlan SplitPlan::from_json(const nlohmann::json& j) {
  SplitPlan plan;
  try {
    plan.holdout_validation_subjects = j.at("holdout_validation_subjects").get<std::vector<int>>();
    for (const auto& f : j.at("folds")) {
      plan.folds.push_back({f.at("train_subjects").get<std::vector<int>>(), f.at("test_subject").get<int>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("split plan: ") + e.what());
  }
  return plan;
}

SplitPlan make_split_plan(std::vector<int> subjects, int holdout, std::uint64_t seed) {
  std::sort(subjects.begin(), subjects.end());
  if (std::adjacent_find(subjects.begin(), subjects.end()) != subjects.end()) {
    throw ConfigError("split plan: duplicate subject ids");
  }
  if (subjects.size() < 4) {
    throw ConfigError("split plan: need at least 4 subjects, got " + std::to_string(subjects.size()));
  }
  if (holdout < 0 || static_cast<std::size_t>(holdout) + 2 > subjects.size()) {
    throw ConfigError("split plan: holdout count leaves fewer than 2 cross-validation subjects");
  }
  std::vector<int> shuffled = subjects;
  std::mt19937_64 rng(seed);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);

  SplitPlan plan;
  plan.holdout_validation_subjects.assign(shuffled.begin(), shuffled.begin() + holdout);
  std::sort(plan.holdout_validation_subjects.begin(), plan.holdout_validation_subjects.end());
  std::vector<int> rest;
  for (int s : subjects)
    if (std::find(plan.holdout_validation_subjects.begin(), plan.holdout_validation_subjects.end(), s) ==
        plan.holdout_validation_subjects.end())
      rest.push_back(s);
  for (int test : rest) {
    Fold f;
    f.test_subject = test;
    for (int s : rest)
      if (s != test) f.train_subjects.push_back(s);
    plan.folds.push_back(std::move(f));
  }
  return plan;
}

SplitPlan per_subject_plan(std::vector<int> subjects) {
  std::sort(subjects.begin(), subjects.end());
  subjects.erase(std::unique(subjects.begin(), subjects.end()), subjects.end());
  if (subjects.empty()) throw ConfigError("split plan: no subjects");
  SplitPlan plan;
  for (int s : subjects) plan.folds.push_back({{}, s});
  return plan;
}

}  // namespace presspose::split
