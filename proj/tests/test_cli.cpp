#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "presspose/evaluation.hpp"
#include "presspose/pressure.hpp"

namespace fs = std::filesystem;
using namespace presspose;

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run_cli(const std::string& args) {
  const fs::path err_file = fs::temp_directory_path() / ("presspose_cli_err_" + std::to_string(::getpid()));
  const std::string cmd = "env -u PRESSPOSE_DATA_DIR " + std::string(PRESSPOSE_CLI) + " " + args + " 2>" +
                          err_file.string();
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_file);
  fs::remove(err_file);
  return r;
}

const char* kToySettings =
    " --set data.working_size=[64,32] --set data.trim=1 --set polishnet.channel_widths=[2,3,4]"
    " --set train.max_iterations=3 --set train.batch_size=2 --set targets.peak_threshold=0.0";

class CliPipeline : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    root = fs::temp_directory_path() / ("presspose_cli_" + std::to_string(::getpid()));
    fs::remove_all(root);
    const auto r = run_cli("data synth --out " + (root / "data").string() +
                           " --subjects 4 --postures 1 --frames 6 --set data.working_size=[64,32]");
    ASSERT_EQ(r.exit_code, 0) << r.err;
  }
  static void TearDownTestSuite() { fs::remove_all(root); }
  static fs::path root;
};

fs::path CliPipeline::root;

}  // namespace

TEST(Cli, HelpListsSubcommands) {
  const auto r = run_cli("--help");
  EXPECT_EQ(r.exit_code, 0);
  for (const char* sub : {"data", "annotate", "train", "sweep-lambda", "eval", "benchmark-colormaps", "polish", "serve"})
    EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
}

TEST(Cli, UsageErrorsExitTwo) {
  auto r = run_cli("train --out /tmp/never");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("--data"), std::string::npos) << r.err;
  r = run_cli("frobnicate");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_FALSE(r.err.empty());
  r = run_cli("train --bogus-flag");
  EXPECT_EQ(r.exit_code, 2);
}

TEST(Cli, LibraryErrorsExitOneWithJson) {
  const auto r = run_cli("train --data /nonexistent/dir --out /tmp/presspose_never");
  EXPECT_EQ(r.exit_code, 1);
  const auto j = nlohmann::json::parse(r.err);
  EXPECT_TRUE(j.contains("error"));
  EXPECT_TRUE(j.contains("message"));
}

TEST_F(CliPipeline, EvalMatchesLibrary) {
  const auto report = root / "report";
  const auto r = run_cli("eval --data " + (root / "data").string() + " --report " + report.string() + kToySettings);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("# Pose evaluation"), std::string::npos);

  // Same pipeline through the library: filter, trim, label join, colorize, split, evaluate.
  auto sequences = data::load_sequence_dir(root / "data");
  for (auto& s : sequences) s = data::trim_transitions(data::median_filter_3d(s), 1);
  const ImageSize working{64, 32};
  const auto store = annotation::load_annotations(root / "data" / data::kAnnotationFile, working);
  const auto samples =
      data::make_samples(data::labeled_frames(sequences, store), data::find_colormap("viridis"), working);
  const auto plan = split::make_split_plan({1, 2, 3, 4}, 2, 0);
  const auto adapter = pose::load_adapter<float>("mock");
  const auto want = eval::evaluate_pipeline({}, *adapter, samples, plan, 0.0);
  EXPECT_EQ(slurp(report / "report.csv"), eval::report_csv(want));
}

TEST_F(CliPipeline, EffectiveConfigReproducesTraining) {
  const auto a = root / "run_a";
  const auto b = root / "run_b";
  auto r = run_cli("train --data " + (root / "data").string() + " --out " + a.string() + kToySettings);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  for (const char* f : {"effective_config.toml", "polishnet.ckpt", "loss_trace.csv"}) EXPECT_TRUE(fs::exists(a / f)) << f;
  r = run_cli("train --config " + (a / "effective_config.toml").string() + " --out " + b.string());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(slurp(a / "polishnet.ckpt"), slurp(b / "polishnet.ckpt"));
  EXPECT_EQ(slurp(a / "loss_trace.csv"), slurp(b / "loss_trace.csv"));
  EXPECT_EQ(slurp(a / "effective_config.toml"), slurp(b / "effective_config.toml"));

  r = run_cli("eval --data " + (root / "data").string() + " --checkpoint " + (a / "polishnet.ckpt").string() +
              " --report " + (root / "report_b").string() + kToySettings);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(slurp(root / "report_b" / "report.csv").find("polish+adapter"), std::string::npos);
}

TEST_F(CliPipeline, DataAndBenchmarkCommands) {
  auto r = run_cli("data colorize --in " + (root / "data" / "1_1.txt").string() + " --out " +
                   (root / "png").string() + " --colormap jet --frame 0" + kToySettings);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(fs::exists(root / "png" / "1_1_00000.png"));
  r = run_cli("benchmark-colormaps --data " + (root / "data").string() + " --maps viridis,jet --out " +
              (root / "bench").string() + kToySettings);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto csv = slurp(root / "bench" / "colormaps.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "rank,colormap,average_auc");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  r = run_cli("benchmark-colormaps --data " + (root / "data").string() + " --maps nope --out " +
              (root / "bench2").string() + kToySettings);
  EXPECT_EQ(r.exit_code, 1);
}
