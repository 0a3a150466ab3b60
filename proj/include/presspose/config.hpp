#pragma once

// Run configuration: TOML file merged with command-line overrides. Every
// constant the pipeline uses lives here with its default, so ablations need
// no code changes.

#include <filesystem>
#include <string>
#include <vector>

#include "presspose/losses.hpp"
#include "presspose/polishnet.hpp"
#include "presspose/training.hpp"

namespace presspose::config {

struct RunConfig {
  std::filesystem::path data_dir;
  std::string colormap = "viridis";
  ImageSize working_size{};
  int trim = 3;

  train::TargetSettings targets;
  double peak_threshold = targets::kDefaultPeakThreshold;

  train::LossWeights weights;
  train::TrainConfig train;
  polish::PolishNetConfig polish;
  std::uint64_t init_seed = 0;

  std::string adapter = "mock";
  int holdout = 2;
  std::uint64_t split_seed = 0;

  /// Checks every section; throws ConfigError.
  void validate() const;
  /// PolishNet config with the working size filled in.
  polish::PolishNetConfig polish_config() const;
};

RunConfig parse_run_config(const std::string& toml_text);
RunConfig load_run_config(const std::filesystem::path& path);

/// Canonical TOML; parse_run_config(to_toml(c)) reproduces c exactly.
std::string to_toml(const RunConfig& config);

/// Applies "section.key=value" overrides, with value in TOML syntax
/// (numbers, true/false, "strings", [arrays]).
void apply_overrides(RunConfig& config, const std::vector<std::string>& overrides);

/// Writes effective_config.toml into `dir` and returns its path.
std::filesystem::path write_effective_config(const RunConfig& config, const std::filesystem::path& dir);

}  // namespace presspose::config
