#include <gtest/gtest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "presspose/config.hpp"
#include "presspose/split.hpp"

using namespace presspose;

TEST(Split, PlanProperties) {
  std::vector<int> subjects(13);
  std::iota(subjects.begin(), subjects.end(), 1);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto plan = split::make_split_plan(subjects, 2, seed);
    ASSERT_EQ(plan.holdout_validation_subjects.size(), 2u);
    ASSERT_EQ(plan.folds.size(), 11u);
    std::set<int> seen(plan.holdout_validation_subjects.begin(), plan.holdout_validation_subjects.end());
    for (const auto& f : plan.folds) {
      EXPECT_TRUE(seen.insert(f.test_subject).second);
      EXPECT_EQ(f.train_subjects.size(), 10u);
      for (int s : f.train_subjects) {
        EXPECT_NE(s, f.test_subject);
        EXPECT_EQ(std::count(plan.holdout_validation_subjects.begin(), plan.holdout_validation_subjects.end(), s), 0);
      }
    }
    EXPECT_EQ(seen.size(), 13u);
    EXPECT_TRUE(std::is_sorted(plan.folds.begin(), plan.folds.end(),
                               [](const auto& a, const auto& b) { return a.test_subject < b.test_subject; }));
    EXPECT_EQ(plan, split::make_split_plan(subjects, 2, seed));
  }
  EXPECT_NE(split::make_split_plan(subjects, 2, 0), split::make_split_plan(subjects, 2, 1));
}

TEST(Split, RejectsBadInputs) {
  EXPECT_THROW(split::make_split_plan({1, 2, 3}), ConfigError);
  EXPECT_THROW(split::make_split_plan({1, 2, 2, 3}), ConfigError);
  EXPECT_THROW(split::make_split_plan({1, 2, 3, 4}, 3), ConfigError);
  EXPECT_THROW(split::per_subject_plan({}), ConfigError);
  EXPECT_THROW(split::SplitPlan::from_json({{"folds", 1}}), ConfigError);
}

TEST(Split, JsonRoundTrip) {
  const auto plan = split::make_split_plan({1, 2, 3, 4, 5, 6}, 2, 9);
  EXPECT_EQ(split::SplitPlan::from_json(nlohmann::json::parse(plan.to_json().dump())), plan);
  EXPECT_EQ(split::per_subject_plan({3, 1, 3}).folds.size(), 2u);
}

TEST(Config, DefaultsRoundTrip) {
  const config::RunConfig defaults;
  const auto text = config::to_toml(defaults);
  const auto parsed = config::parse_run_config(text);
  EXPECT_EQ(config::to_toml(parsed), text);
  EXPECT_EQ(parsed.working_size, (ImageSize{256, 128}));
  EXPECT_DOUBLE_EQ(parsed.weights.pixel, 1.0 / 30000.0);
  EXPECT_DOUBLE_EQ(parsed.train.learning_rate, 1e-4);
  EXPECT_EQ(parsed.polish.channel_widths, (std::vector<int>{64, 128, 256}));
  EXPECT_EQ(config::parse_run_config("").colormap, "viridis");
}

TEST(Config, PartialFileAndOverrides) {
  auto c = config::parse_run_config("[train]\nbatch_size = 4\n[data]\nworking_size = [64, 32]\n");
  EXPECT_EQ(c.train.batch_size, 4);
  EXPECT_EQ(c.working_size, (ImageSize{64, 32}));
  EXPECT_EQ(c.polish_config().working_size, (ImageSize{64, 32}));
  config::apply_overrides(c, {"loss.lambda_pixel=0.1", "data.colormap=\"jet\"", "polishnet.channel_widths=[2,3,4]"});
  EXPECT_DOUBLE_EQ(c.weights.pixel, 0.1);
  EXPECT_EQ(c.colormap, "jet");
  EXPECT_EQ(c.polish.channel_widths, (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(c.working_size, (ImageSize{64, 32}));
}

TEST(Config, Errors) {
  EXPECT_THROW(config::parse_run_config("[train]\nbatch_sise = 4\n"), ConfigError);
  EXPECT_THROW(config::parse_run_config("[train]\nbatch_size = \"four\"\n"), ConfigError);
  EXPECT_THROW(config::parse_run_config("[train]\nbatch_size = 0\n"), ConfigError);
  EXPECT_THROW(config::parse_run_config("[data]\nworking_size = [64]\n"), ConfigError);
  EXPECT_THROW(config::parse_run_config("not toml ["), ConfigError);
  config::RunConfig c;
  EXPECT_THROW(config::apply_overrides(c, {"train.nope=1"}), ConfigError);
  EXPECT_THROW(config::apply_overrides(c, {"novalue"}), ConfigError);
  EXPECT_THROW(config::load_run_config("/nonexistent/run.toml"), IOError);
}

TEST(Config, EffectiveConfigEchoReloads) {
  auto c = config::parse_run_config("init_seed = 5\n[train]\nmax_iterations = 7\n");
  const auto dir = std::filesystem::temp_directory_path() / ("presspose_cfg_" + std::to_string(::getpid()));
  const auto path = config::write_effective_config(c, dir);
  EXPECT_EQ(path.filename(), "effective_config.toml");
  const auto again = config::load_run_config(path);
  EXPECT_EQ(config::to_toml(again), config::to_toml(c));
  EXPECT_EQ(again.train.max_iterations, 7);
  EXPECT_EQ(again.init_seed, 5u);
  std::filesystem::remove_all(dir);
}
