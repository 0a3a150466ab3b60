// Acceptance suite: one PASS/FAIL line per criterion, with the measured
// values and the wall time against its budget. Exit status is nonzero when
// any criterion fails.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gradcheck.hpp"
#include "oracles.hpp"
#include "presspose/experiments.hpp"
#include "presspose/losses.hpp"
#include "presspose/targets.hpp"

namespace fs = std::filesystem;
using namespace presspose;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string name;
  double budget_seconds = 0.0;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

/// |a - b| / max(|a|, |b|), zero when both are zero.
double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("presspose_accept_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

FeatureMap<double> random_map(std::mt19937_64& rng, int c, int h, int w, bool integer) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_int_distribution<int> k(-9, 9);
  FeatureMap<double> m(c, h, w);
  for (Eigen::Index i = 0; i < m.data.size(); ++i) m.data.data()[i] = integer ? k(rng) : n(rng);
  return m;
}

template <std::size_t N>
std::array<bool, N> random_mask(std::mt19937_64& rng) {
  std::bernoulli_distribution b(0.7);
  std::array<bool, N> m{};
  for (auto& v : m) v = b(rng);
  return m;
}

// ---- criteria ----

Outcome oracle_equivalence() {
  constexpr int kFixtures = 100;
  std::mt19937_64 rng(20240);
  std::map<std::string, int> mismatches;
  std::string op;
  double worst_rel = 0.0;
  auto miss = [&](bool ok) { mismatches[op] += ok ? 0 : 1; };
  auto check_exact = [&](double a, double b) { miss(a == b); };
  auto check_rel = [&](double a, double b) {
    const double r = rel_diff(a, b);
    worst_rel = std::max(worst_rel, r);
    miss(r <= 1e-10);
  };

  // median filter: values are picked, never computed, so equality is exact for both kinds
  op = "median";
  for (int f = 0; f < kFixtures; ++f) {
    const auto seq = testkit::random_sequence(rng, 1 + f % 4, f % 2 == 0);
    const auto got = data::median_filter_3d(seq);
    const auto want = testkit::median_oracle(seq);
    for (std::size_t t = 0; t < seq.frames.size(); ++t) miss(got.frames[t].values == want.frames[t].values);
  }

  // the three loss sums
  for (int f = 0; f < kFixtures; ++f) {
    const bool integer = f % 2 == 0;
    const int h = 2 + f % 5;
    const int w = 2 + (f / 5) % 4;
    auto a = random_map(rng, kPartCount, h, w, integer);
    auto b = random_map(rng, kPartCount, h, w, integer);
    const auto parts = random_mask<kPartCount>(rng);
    op = "heatmap_loss";
    const double heat = train::heatmap_loss(a, b, parts);
    const double heat_want = testkit::sse_oracle(a, b, std::vector<bool>(parts.begin(), parts.end()));
    integer ? check_exact(heat, heat_want) : check_rel(heat, heat_want);

    a = random_map(rng, kPafChannels, h, w, integer);
    b = random_map(rng, kPafChannels, h, w, integer);
    const auto limbs = random_mask<kLimbCount>(rng);
    std::vector<bool> channels;
    for (bool l : limbs) channels.insert(channels.end(), {l, l});
    op = "paf_loss";
    const double paf = train::paf_loss(a, b, limbs);
    const double paf_want = testkit::sse_oracle(a, b, channels);
    integer ? check_exact(paf, paf_want) : check_rel(paf, paf_want);

    a = random_map(rng, 3, h, w, integer);
    b = random_map(rng, 3, h, w, integer);
    op = "pixel_loss";
    const double pix = train::pixel_loss(a, b);
    const double pix_want = testkit::sse_oracle(a, b, std::vector<bool>(3, true));
    integer ? check_exact(pix, pix_want) : check_rel(pix, pix_want);
  }

  // PCK counting (exact) and AUC (relative)
  const ImageSize pck_size{48, 24};
  for (int f = 0; f < kFixtures; ++f) {
    const int frames = 1 + f % 6;
    std::vector<KeypointSet> pred;
    std::vector<KeypointSet> gt;
    for (int i = 0; i < frames; ++i) {
      gt.push_back(testkit::random_keypoints(rng, pck_size, 0.85, f % 2 == 0));
      pred.push_back(testkit::random_keypoints(rng, pck_size, 0.85, f % 2 == 0));
      // some predictions land near the truth so counts span the grid
      for (int k = 0; k < kPartCount; k += 2) pred.back().points[k] = gt.back().points[k] + Eigen::Vector2d(1.0, -2.0);
      if (i == 0 && f % 7 == 0) gt.back().points[index_of(Part::kRHip)] = gt.back().points[index_of(Part::kLShoulder)];
    }
    const auto thresholds = eval::default_thresholds();
    const auto got = eval::pck(pred, gt, thresholds);
    const auto want = testkit::pck_oracle(pred, gt, thresholds);
    for (int k = 0; k < kPartCount; ++k) {
      const auto& curve = got.curves[k];
      op = "pck";
      miss(curve.visible_count == want.visible[k]);
      miss(curve.true_positives == want.hits[k]);
      op = "auc";
      check_rel(eval::auc(curve), testkit::auc_oracle(want.hits[k], want.visible[k]));
    }
  }

  // nearest-frame propagation
  op = "propagation";
  const ImageSize bounds{256, 128};
  for (int f = 0; f < kFixtures; ++f) {
    const int frames = 3 + f % 5;
    const auto seq = testkit::random_sequence(rng, frames, f % 2 == 0, 3, 2);
    std::vector<int> manual{f % frames};
    if (f % 3 == 0) manual.push_back((f + 2) % frames);
    if (manual.size() == 2 && manual[0] == manual[1]) manual.pop_back();
    annotation::AnnotationStore store(bounds);
    for (int t : manual) {
      auto ks = testkit::random_keypoints(rng, bounds);
      ks.frame = {3, 2, t};
      store.put(ks);
    }
    const auto out = annotation::propagate(store, seq);
    for (const auto& [t, source] : testkit::propagation_oracle(seq, manual)) {
      const auto* rec = out.find({3, 2, t});
      const bool ok = rec != nullptr && rec->provenance.propagated_from &&
                      rec->provenance.propagated_from->timestamp_index == source;
      miss(ok);
    }
  }

  // target rendering
  const auto& topo = SkeletonTopology::standard();
  const ImageSize target_size{20, 12};
  for (int f = 0; f < kFixtures; ++f) {
    const auto ks = testkit::random_keypoints(rng, target_size, 0.8, f % 2 == 0);
    const double sigma = 0.5 + 0.05 * f;
    const double width = 0.4 + 0.03 * f;
    const auto heat = targets::render_heatmaps<double>(ks, target_size, sigma);
    const auto pafs = targets::render_pafs<double>(ks, topo, target_size, width);
    for (int y = 0; y < target_size.height; ++y)
      for (int x = 0; x < target_size.width; ++x) {
        op = "heatmaps";
        for (int k = 0; k < kPartCount; ++k)
          check_rel(heat(k, y, x), ks.visible[k] ? testkit::gaussian_oracle(x, y, ks.points[k], sigma) : 0.0);
        for (int l = 0; l < kLimbCount; ++l) {
          const auto [a, b] = topo.limbs[l];
          op = "pafs";
          Eigen::Vector2d want = Eigen::Vector2d::Zero();
          if (ks.visible[a] && ks.visible[b]) want = testkit::paf_oracle(x, y, ks.points[a], ks.points[b], width);
          check_rel(pafs(2 * l, y, x), want.x());
          check_rel(pafs(2 * l + 1, y, x), want.y());
        }
      }
  }

  int total = 0;
  std::string failing;
  for (const auto& [name, count] : mismatches) {
    total += count;
    if (count > 0) failing += " " + name + "=" + std::to_string(count);
  }
  return {total == 0, std::to_string(kFixtures) + " fixtures for each of " + std::to_string(mismatches.size()) +
                          " operations, worst float rel " + fmt("%.2e", worst_rel) +
                          (failing.empty() ? "" : ", mismatches:" + failing)};
}

Outcome gradient_correctness() {
  double worst = 0.0;
  std::size_t params = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto g = testkit::objective_gradient_check(seed);
    worst = std::max(worst, g.relative_error);
    params = g.parameters;
  }
  return {worst <= 1e-3, "5 seeds, " + std::to_string(params) + " parameters each, worst rel " + fmt("%.2e", worst)};
}

Outcome frozen_backbone() {
  const auto adapter = pose::make_mock_adapter<float>(3);
  const auto before = adapter->checksum();
  const auto init = polish::init_params<float>(testkit::toy_polish_config(), 5);
  train::TrainConfig cfg;
  cfg.max_iterations = 200;
  cfg.batch_size = 2;
  const auto r = train::train(init, *adapter, testkit::synthetic_samples({28, 28}, 2, 2), cfg, train::LossWeights{});
  const auto after = adapter->checksum();
  const bool polish_changed = polish::checksum(r.params) != polish::checksum(init);
  return {r.iterations == 200 && before == after && r.adapter_checksum == before && polish_changed,
          std::to_string(r.iterations) + " iterations, adapter " + (before == after ? "unchanged" : "CHANGED") +
              ", polishnet " + (polish_changed ? "changed" : "UNCHANGED")};
}

/// Toy scale used by the training criteria: 20 synthetic frames from four
/// subjects at 64 x 32, a mock adapter with doubled weight gain.
std::vector<data::Sample> toy_frames() { return testkit::synthetic_samples({64, 32}, 4, 5); }

Outcome toy_convergence() {
  pose::MockOptions mo;
  mo.seed = 7;
  mo.weight_gain = 2.0;
  const auto adapter = pose::make_mock_adapter<float>(mo);
  polish::PolishNetConfig pc;
  pc.channel_widths = {8, 16, 32};
  pc.working_size = {64, 32};
  train::TrainConfig cfg;  // lr 1e-4, decay 0.95 every 100
  cfg.batch_size = 20;
  cfg.max_iterations = 251;
  const auto samples = toy_frames();
  const auto r = train::train(polish::init_params<float>(pc, 0), *adapter, samples, cfg, train::LossWeights{});
  const auto& rec = r.trace.records;
  if (rec.size() < 251) return {false, "trace has " + std::to_string(rec.size()) + " records"};
  const double ratio = rec[200].total / rec[0].total;
  const bool lr_exact = train::learning_rate_at(cfg, 250) == 9.025e-5 && rec[250].lr == 9.025e-5;
  return {ratio <= 0.5 && lr_exact && samples.size() == 20,
          "E_total " + fmt("%.1f", rec[0].total) + " -> " + fmt("%.1f", rec[200].total) + " (ratio " +
              fmt("%.3f", ratio) + "), lr(250) " + fmt("%.6e", rec[250].lr) + (lr_exact ? " exact" : " NOT exact")};
}

Outcome lambda_monotonicity() {
  pose::MockOptions mo;
  mo.seed = 7;
  const auto base = pose::make_mock_adapter<float>(mo);
  train::RunSetup setup;
  setup.polish.channel_widths = {8, 16, 32};
  setup.polish.working_size = {32, 32};
  setup.train.batch_size = 20;
  setup.train.max_iterations = 1500;
  setup.train.learning_rate = 1e-3;
  setup.peak_threshold = 0.0;
  const auto samples = testkit::synthetic_samples(setup.polish.working_size, 4, 5);
  const auto rows = train::lambda_sweep({1e-6, 1.0 / 30000.0, 1e-1}, setup, *base, samples, {});
  const bool pixel_decreasing = rows[0].final_pixel > rows[1].final_pixel && rows[1].final_pixel > rows[2].final_pixel;
  const bool largest_worst = rows[2].train_auc < rows[0].train_auc && rows[2].train_auc < rows[1].train_auc;
  std::string detail;
  for (const auto& r : rows)
    detail += "lambda " + fmt("%.3g", r.lambda_pixel) + ": E_pixel " + fmt("%.1f", r.final_pixel) + " AUC " +
              fmt("%.2f", r.train_auc) + "; ";
  detail += std::string("E_pixel ") + (pixel_decreasing ? "decreasing" : "NOT decreasing") + ", largest lambda " +
            (largest_worst ? "worst AUC" : "NOT worst AUC");
  return {pixel_decreasing && largest_worst, detail};
}

Outcome round_trips() {
  std::mt19937_64 rng(515);
  int failures = 0;

  const ImageSize size{40, 24};
  for (int f = 0; f < 200; ++f) {
    const auto ks = testkit::random_keypoints(rng, size, 0.7, true);
    const auto decoded = targets::decode_keypoints(targets::render_heatmaps<float>(ks, size, 2.0), 0.5).keypoints;
    for (int k = 0; k < kPartCount; ++k) {
      if (decoded.visible[k] != ks.visible[k]) ++failures;
      if (ks.visible[k] && decoded.points[k] != ks.points[k]) ++failures;
    }
  }

  const auto dir = scratch("roundtrip");
  int files = 0;
  for (int f = 0; f < 20; ++f) {
    auto seq = testkit::random_sequence(rng, 1 + f % 3, f % 2 == 0, 1 + f % 13, 2);
    seq.meta.sample_rate_hz = 0.25 * (f + 1);
    for (auto format : {data::FileFormat::kText, data::FileFormat::kBinary}) {
      const auto path = dir / (format == data::FileFormat::kText ? "s.txt" : "s.pmat");
      data::save_sequence(seq, path, format);
      const auto back = data::load_sequence(path);
      bool same = back.size() == seq.size() && back.meta.subject_id == seq.meta.subject_id &&
                  back.meta.posture_id == seq.meta.posture_id && back.meta.sample_rate_hz == seq.meta.sample_rate_hz;
      for (std::size_t t = 0; same && t < seq.size(); ++t)
        same = back.frames[t].values == seq.frames[t].values &&
               back.frames[t].timestamp_index == seq.frames[t].timestamp_index;
      failures += same ? 0 : 1;
      ++files;
    }
  }

  const auto adapter = pose::make_mock_adapter<float>(1);
  train::TrainConfig cfg;
  cfg.max_iterations = 5;
  cfg.batch_size = 2;
  const auto samples = testkit::synthetic_samples({28, 28}, 2, 2);
  const auto trained = train::train(polish::init_params<float>(testkit::toy_polish_config(), 2), *adapter, samples, cfg,
                                    train::LossWeights{})
                           .params;
  polish::save_checkpoint(trained, dir / "p.ckpt");
  const auto loaded = polish::load_checkpoint(dir / "p.ckpt");
  int outputs = 0;
  for (const auto& s : samples) {
    const auto a = polish::forward_eval(trained, s.image);
    const auto b = polish::forward_eval(loaded, s.image);
    failures += (a.data.size() == b.data.size() &&
                 std::memcmp(a.data.data(), b.data.data(), sizeof(float) * a.data.size()) == 0)
                    ? 0
                    : 1;
    ++outputs;
  }
  fs::remove_all(dir);
  return {failures == 0, "200 keypoint sets, " + std::to_string(files) + " data files, " + std::to_string(outputs) +
                             " checkpoint forward outputs, failures " + std::to_string(failures)};
}

Outcome adapter_swap() {
  const auto dataset = testkit::synthetic_samples({64, 32}, 4, 3);
  const auto plan = split::make_split_plan({1, 2, 3, 4}, 2, 0);
  const auto first = pose::load_adapter<float>("mock:0");
  const auto second = pose::load_adapter<float>("mock:1");
  train::RunSetup setup;
  setup.polish.channel_widths = {2, 3, 4};
  setup.polish.working_size = {64, 32};
  setup.train.max_iterations = 10;
  setup.train.batch_size = 4;
  setup.peak_threshold = 0.0;
  auto fold_params = [&](const pose::PoseAdapter<float>& adapter) {
    std::vector<polish::PolishNetParams<float>> out;
    for (auto& f : train::train_folds(setup, adapter, dataset, plan)) out.push_back(std::move(f.result.params));
    return out;
  };
  const auto report = eval::compare_adapters(fold_params(*first), *first, fold_params(*second), *second, dataset, plan, 0.0);
  const auto dir = scratch("swap");
  const auto written = eval::emit_report(report, dir);
  std::ifstream in(dir / "report.csv");
  std::string line;
  std::set<std::string> labels;
  int lines = 0;
  std::getline(in, line);
  while (std::getline(in, line)) {
    ++lines;
    labels.insert(line.substr(0, line.find(',')));
  }
  fs::remove_all(dir);
  std::string names;
  for (const auto& v : report.variants) names += (names.empty() ? "" : ", ") + v.label;
  const bool ok = report.variants.size() == 4 && labels.size() == 4 && lines == 4 * (kPartCount + 1) &&
                  report.variants[0].adapter == "mock-0" && report.variants[2].adapter == "mock-1" &&
                  !report.variants[0].polished && report.variants[1].polished && written.size() >= 3;
  return {ok, std::to_string(report.variants.size()) + " rows (" + names + "), " + std::to_string(written.size()) +
                  " report files"};
}

Outcome colormap_benchmark() {
  const auto adapter = testkit::probe_adapter();
  const auto maps = testkit::benchmark_maps();
  const auto table =
      eval::colormap_benchmark(*adapter, testkit::blob_frames(20), maps, testkit::kBlobWorkingSize, 0.0);
  const bool ok = table.size() == maps.size() && table.front().name == "red_ramp" &&
                  table[0].average_auc > table[1].average_auc;
  return {ok, std::to_string(table.size()) + " rows for " + std::to_string(maps.size()) + " maps, first " +
                  table.front().name + " " + fmt("%.2f", table[0].average_auc) + ", second " + table[1].name + " " +
                  fmt("%.2f", table[1].average_auc)};
}

}  // namespace

int main(int argc, char** argv) {
  // optional arguments select criteria by name
  const std::set<std::string> only(argv + 1, argv + argc);
  const std::vector<Criterion> criteria = {
      {"oracle-equivalence", 60, oracle_equivalence},
      {"gradient-correctness", 120, gradient_correctness},
      {"frozen-backbone", 120, frozen_backbone},
      {"toy-convergence", 300, toy_convergence},
      {"lambda-monotonicity", 600, lambda_monotonicity},
      {"round-trips", 60, round_trips},
      {"adapter-swap", 120, adapter_swap},
      {"colormap-benchmark", 60, colormap_benchmark},
  };
  int failed = 0;
  int ran = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.contains(c.name)) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over time budget";
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %s [%.1fs / %.0fs] %s\n", o.pass ? "PASS" : "FAIL", c.name.c_str(), seconds, c.budget_seconds,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
