#pragma once

// Leave-one-subject-out folds with a fixed pair of validation subjects.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <vector>

namespace presspose::split {

struct Fold {
  std::vector<int> train_subjects;
  int test_subject = 0;

  bool operator==(const Fold&) const = default;
};

struct SplitPlan {
  std::vector<Fold> folds;
  std::vector<int> holdout_validation_subjects;

  /// Subjects used for cross-validation (everything but the holdouts).
  std::vector<int> cross_validation_subjects() const;
  nlohmann::json to_json() const;
  static SplitPlan from_json(const nlohmann::json& j);
  bool operator==(const SplitPlan&) const = default;
};

/// Picks `holdout` validation subjects with a seeded shuffle, then one fold
/// per remaining subject in ascending order. Needs at least four distinct
/// subjects.
SplitPlan make_split_plan(std::vector<int> subjects, int holdout = 2, std::uint64_t seed = 0);

/// One fold per subject and no holdouts; for evaluating a fixed checkpoint
/// on data that took no part in training.
SplitPlan per_subject_plan(std::vector<int> subjects);

}  // namespace presspose::split
