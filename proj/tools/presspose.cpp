// presspose command-line entry point.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "presspose/config.hpp"
#include "presspose/dataset.hpp"
#include "presspose/errors.hpp"
#include "presspose/evaluation.hpp"
#include "presspose/experiments.hpp"
#include "presspose/png.hpp"
#include "presspose/service.hpp"
#include "presspose/split.hpp"
#include "presspose/synthetic.hpp"

namespace fs = std::filesystem;
using namespace presspose;

namespace {

// Missing or contradictory command-line input; exits with status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string data_dir;
};

void add_common(CLI::App* cmd, Common& c, bool with_data = true) {
  cmd->add_option("--config", c.config_path, "TOML run configuration");
  cmd->add_option("--set", c.overrides, "Override a config value, e.g. --set train.batch_size=4");
  if (with_data) cmd->add_option("--data", c.data_dir, "Data directory (default: $PRESSPOSE_DATA_DIR or data.dir)");
}

config::RunConfig resolve_config(const Common& c) {
  config::RunConfig cfg = c.config_path.empty() ? config::RunConfig{} : config::load_run_config(c.config_path);
  config::apply_overrides(cfg, c.overrides);
  if (!c.data_dir.empty()) {
    cfg.data_dir = c.data_dir;
  } else if (cfg.data_dir.empty()) {
    if (const char* env = std::getenv("PRESSPOSE_DATA_DIR"); env != nullptr && *env != '\0') cfg.data_dir = env;
  }
  cfg.validate();
  return cfg;
}

void require_data_dir(const config::RunConfig& cfg) {
  if (cfg.data_dir.empty()) throw UsageError("missing data directory: pass --data or set PRESSPOSE_DATA_DIR");
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw IOError("cannot write " + path.string());
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// Sequences with the median filter and transition trim applied.
std::vector<data::PressureSequence> load_clean_sequences(const config::RunConfig& cfg) {
  auto sequences = data::load_sequence_dir(cfg.data_dir);
  for (auto& s : sequences) s = data::trim_transitions(data::median_filter_3d(s), cfg.trim);
  return sequences;
}

annotation::AnnotationStore load_store(const config::RunConfig& cfg) {
  const auto path = cfg.data_dir / data::kAnnotationFile;
  if (!fs::exists(path)) return annotation::AnnotationStore(cfg.working_size);
  return annotation::load_annotations(path, cfg.working_size);
}

std::vector<data::LabeledFrame> load_labeled(const config::RunConfig& cfg) {
  auto frames = data::labeled_frames(load_clean_sequences(cfg), load_store(cfg));
  if (frames.empty()) throw ValidationError("no annotated frames in " + cfg.data_dir.string());
  return frames;
}

std::vector<data::Sample> load_samples(const config::RunConfig& cfg) {
  return data::make_samples(load_labeled(cfg), data::find_colormap(cfg.colormap), cfg.working_size);
}

std::vector<int> subjects_of(const std::vector<data::Sample>& samples) {
  std::vector<int> out;
  for (const auto& s : samples)
    if (std::find(out.begin(), out.end(), s.frame.subject_id) == out.end()) out.push_back(s.frame.subject_id);
  std::sort(out.begin(), out.end());
  return out;
}

train::RunSetup run_setup(const config::RunConfig& cfg) {
  return {cfg.polish_config(), cfg.init_seed, cfg.train, cfg.weights, cfg.targets, cfg.peak_threshold};
}

fs::path prepare_out(const fs::path& out, const config::RunConfig& cfg) {
  config::write_effective_config(cfg, out);
  return out;
}

data::PressureFrame pick_frame(const data::PressureSequence& seq, int t) {
  for (const auto& f : seq.frames)
    if (f.timestamp_index == t) return f;
  throw ValidationError("frame " + std::to_string(t) + " not in sequence " + seq.id());
}

// ---- data ----

struct CleanArgs {
  std::string in, out, format = "auto";
  int trim = -1;
};

int cmd_data_clean(const Common& c, const CleanArgs& a) {
  auto cfg = resolve_config(c);
  const int trim = a.trim >= 0 ? a.trim : cfg.trim;
  const auto seq = data::trim_transitions(data::median_filter_3d(data::load_sequence(a.in)), trim);
  data::FileFormat fmt = fs::path(a.out).extension() == ".pmat" ? data::FileFormat::kBinary : data::FileFormat::kText;
  if (a.format == "text") fmt = data::FileFormat::kText;
  if (a.format == "binary") fmt = data::FileFormat::kBinary;
  if (fs::path(a.out).has_parent_path()) fs::create_directories(fs::path(a.out).parent_path());
  data::save_sequence(seq, a.out, fmt);
  std::cout << "wrote " << seq.size() << " frames to " << a.out << "\n";
  return 0;
}

struct ColorizeArgs {
  std::string in, out, colormap;
  int frame = -1;
};

int cmd_data_colorize(const Common& c, const ColorizeArgs& a) {
  auto cfg = resolve_config(c);
  const auto& map = data::find_colormap(a.colormap.empty() ? cfg.colormap : a.colormap);
  const auto seq = data::load_sequence(a.in);
  fs::create_directories(a.out);
  int written = 0;
  for (const auto& f : seq.frames) {
    if (a.frame >= 0 && f.timestamp_index != a.frame) continue;
    char name[64];
    std::snprintf(name, sizeof name, "%s_%05d.png", seq.id().c_str(), f.timestamp_index);
    io::write_png(fs::path(a.out) / name, data::colorize(f, map, cfg.working_size));
    ++written;
  }
  if (a.frame >= 0 && written == 0) throw ValidationError("frame " + std::to_string(a.frame) + " not in " + a.in);
  std::cout << "wrote " << written << " images to " << a.out << "\n";
  return 0;
}

struct SynthArgs {
  std::string out;
  int subjects = 4, postures = 1, frames = 10;
  std::uint64_t seed = 0;
  bool seeds_only = false;
  double noise = 1.0;
};

int cmd_data_synth(const Common& c, const SynthArgs& a) {
  auto cfg = resolve_config(c);
  fs::create_directories(a.out);
  annotation::AnnotationStore store(cfg.working_size);
  for (int s = 1; s <= a.subjects; ++s) {
    for (int p = 1; p <= a.postures; ++p) {
      data::SyntheticOptions opt;
      opt.frames = a.frames;
      opt.working = cfg.working_size;
      opt.seed = a.seed * 1000003u + static_cast<std::uint64_t>(s * 100 + p);
      opt.noise_mmhg = a.noise;
      const auto synth = data::make_synthetic_sequence(s, p, opt);
      data::save_sequence(synth.sequence, fs::path(a.out) / (synth.sequence.id() + ".txt"), data::FileFormat::kText);
      for (std::size_t i = 0; i < synth.keypoints.size(); ++i) {
        if (a.seeds_only && i != 0) continue;
        store.put(synth.keypoints[i]);
      }
    }
  }
  annotation::save_annotations(store, fs::path(a.out) / data::kAnnotationFile);
  std::cout << "wrote " << a.subjects * a.postures << " sequences and " << store.size() << " labels to " << a.out
            << "\n";
  return 0;
}

// ---- annotate ----

int cmd_annotate_propagate(const Common& c, const std::string& sequence) {
  auto cfg = resolve_config(c);
  require_data_dir(cfg);
  const auto sequences = data::load_sequence_dir(cfg.data_dir);
  auto store = load_store(cfg);
  bool found = false;
  for (const auto& seq : sequences) {
    if (sequence != "all" && seq.id() != sequence) continue;
    store = annotation::propagate(std::move(store), seq);
    found = true;
  }
  if (!found) throw ValidationError("unknown sequence " + sequence);
  annotation::save_annotations(store, cfg.data_dir / data::kAnnotationFile);
  std::cout << "store now holds " << store.size() << " records\n";
  return 0;
}

int cmd_annotate_export(const Common& c, const std::string& out) {
  auto cfg = resolve_config(c);
  require_data_dir(cfg);
  annotation::save_annotations(load_store(cfg), out);
  std::cout << "wrote " << out << "\n";
  return 0;
}

// ---- training ----

struct TrainArgs {
  std::string out;
  std::string adapter;
  bool loso = false;
};

int cmd_train(Common c, const TrainArgs& a) {
  if (!a.adapter.empty()) c.overrides.push_back("adapter=\"" + a.adapter + "\"");
  auto cfg = resolve_config(c);
  require_data_dir(cfg);
  const fs::path out = prepare_out(a.out, cfg);
  const auto adapter = pose::load_adapter<float>(cfg.adapter);
  const auto samples = load_samples(cfg);
  const auto setup = run_setup(cfg);
  const nlohmann::json meta{{"adapter", cfg.adapter}, {"colormap", cfg.colormap}};
  if (!a.loso) {
    const auto result = train::run_training(setup, *adapter, samples);
    polish::save_checkpoint(result.params, out / "polishnet.ckpt", meta);
    result.trace.save_csv(out / "loss_trace.csv");
    std::cout << "trained " << result.iterations << " iterations on " << samples.size() << " frames; E_total "
              << eval::format_number(result.trace.records.front().total) << " -> "
              << eval::format_number(result.trace.records.back().total) << "\n";
    return 0;
  }
  const auto plan = split::make_split_plan(subjects_of(samples), cfg.holdout, cfg.split_seed);
  write_text(out / "split.json", plan.to_json().dump(2) + "\n");
  for (const auto& fold : train::train_folds(setup, *adapter, samples, plan)) {
    const std::string stem = "fold_" + std::to_string(fold.test_subject);
    polish::save_checkpoint(fold.result.params, out / (stem + ".ckpt"), meta);
    fold.result.trace.save_csv(out / (stem + "_loss.csv"));
    std::cout << stem << ": " << fold.result.iterations << " iterations"
              << (fold.result.early_stopped ? " (early stop)" : "") << "\n";
  }
  return 0;
}

struct SweepArgs {
  std::string out;
  std::string values = "1e-6,3.3e-5,1e-3";
};

int cmd_sweep(const Common& c, const SweepArgs& a) {
  auto cfg = resolve_config(c);
  require_data_dir(cfg);
  std::vector<double> values;
  for (const auto& v : split_list(a.values)) {
    try {
      values.push_back(std::stod(v));
    } catch (const std::exception&) {
      throw UsageError("--values: not a number: " + v);
    }
  }
  const fs::path out = prepare_out(a.out, cfg);
  const auto adapter = pose::load_adapter<float>(cfg.adapter);
  const auto samples = load_samples(cfg);
  const auto plan = split::make_split_plan(subjects_of(samples), cfg.holdout, cfg.split_seed);
  const auto& fold = plan.folds.front();
  const auto train_set = data::filter_subjects(samples, fold.train_subjects);
  const auto test_set = data::filter_subjects(samples, {fold.test_subject});
  const auto rows = train::lambda_sweep(values, run_setup(cfg), *adapter, train_set, test_set);
  const auto csv = train::sweep_csv(rows);
  write_text(out / "sweep.csv", csv);
  std::cout << csv;
  return 0;
}

// ---- evaluation ----

// A checkpoint file applies to every fold; a directory holds fold_<subject>.ckpt
// files and optionally the split.json written by `train --loso`.
std::vector<polish::PolishNetParams<float>> load_polish(const std::string& where, const split::SplitPlan& plan) {
  std::vector<polish::PolishNetParams<float>> out;
  if (where.empty()) return out;
  if (!fs::is_directory(where)) {
    out.push_back(polish::load_checkpoint(where));
    return out;
  }
  for (const auto& f : plan.folds) {
    out.push_back(polish::load_checkpoint(fs::path(where) / ("fold_" + std::to_string(f.test_subject) + ".ckpt")));
  }
  return out;
}

split::SplitPlan resolve_plan(const std::string& checkpoint, const config::RunConfig& cfg,
                              const std::vector<data::Sample>& samples) {
  if (!checkpoint.empty() && fs::is_directory(checkpoint) && fs::exists(fs::path(checkpoint) / "split.json")) {
    std::ifstream in(fs::path(checkpoint) / "split.json");
    return split::SplitPlan::from_json(nlohmann::json::parse(in));
  }
  return split::make_split_plan(subjects_of(samples), cfg.holdout, cfg.split_seed);
}

struct EvalArgs {
  std::string checkpoint, adapter, report;
  std::string compare, compare_checkpoint;
};

int cmd_eval(Common c, const EvalArgs& a) {
  if (!a.adapter.empty()) c.overrides.push_back("adapter=\"" + a.adapter + "\"");
  auto cfg = resolve_config(c);
  require_data_dir(cfg);
  const fs::path out = prepare_out(a.report, cfg);
  const auto adapter = pose::load_adapter<float>(cfg.adapter);
  const auto samples = load_samples(cfg);
  const auto plan = resolve_plan(a.checkpoint, cfg, samples);
  const auto polish = load_polish(a.checkpoint, plan);
  eval::EvalReport report;
  if (a.compare.empty()) {
    report = eval::evaluate_pipeline(polish, *adapter, samples, plan, cfg.peak_threshold);
  } else {
    const auto second = pose::load_adapter<float>(a.compare);
    const auto polish_second =
        a.compare_checkpoint.empty() ? polish : load_polish(a.compare_checkpoint, plan);
    report = eval::compare_adapters(polish, *adapter, polish_second, *second, samples, plan, cfg.peak_threshold);
  }
  report.metadata["adapter"] = cfg.adapter;
  report.metadata["checkpoint"] = a.checkpoint;
  report.metadata["colormap"] = cfg.colormap;
  for (const auto& p : eval::emit_report(report, out)) std::cout << "wrote " << p.string() << "\n";
  std::cout << eval::report_markdown(report);
  return 0;
}

struct BenchArgs {
  std::string maps = "all", adapter, out;
};

int cmd_benchmark(Common c, const BenchArgs& a) {
  if (!a.adapter.empty()) c.overrides.push_back("adapter=\"" + a.adapter + "\"");
  auto cfg = resolve_config(c);
  require_data_dir(cfg);
  std::vector<data::Colormap> maps;
  if (a.maps == "all") {
    maps = data::list_colormaps();
  } else {
    for (const auto& name : split_list(a.maps)) maps.push_back(data::find_colormap(name));
  }
  const auto adapter = pose::load_adapter<float>(cfg.adapter);
  const auto scores =
      eval::colormap_benchmark(*adapter, load_labeled(cfg), maps, cfg.working_size, cfg.peak_threshold);
  std::ostringstream csv;
  csv << "rank,colormap,average_auc\n";
  for (std::size_t i = 0; i < scores.size(); ++i) {
    csv << i + 1 << "," << scores[i].name << "," << eval::format_number(scores[i].average_auc) << "\n";
  }
  if (!a.out.empty()) {
    prepare_out(a.out, cfg);
    write_text(fs::path(a.out) / "colormaps.csv", csv.str());
  }
  std::cout << csv.str();
  return 0;
}

struct PolishArgs {
  std::string checkpoint, in, out, colormap;
  int frame = 0;
};

int cmd_polish(const Common& c, const PolishArgs& a) {
  auto cfg = resolve_config(c);
  const auto params = polish::load_checkpoint(a.checkpoint);
  ColorImage image;
  if (fs::path(a.in).extension() == ".png") {
    image = io::read_png(a.in);
  } else {
    const auto seq = data::load_sequence(a.in);
    const auto& map = data::find_colormap(a.colormap.empty() ? cfg.colormap : a.colormap);
    image = data::colorize(pick_frame(seq, a.frame), map, params.config.working_size);
  }
  const auto polished = polish::forward_eval(params, image);
  io::write_png(a.out, polished);
  std::cout << "wrote " << a.out << "\n";
  return 0;
}

// ---- serve ----

service::HttpServer* g_server = nullptr;

extern "C" void on_signal(int) {
  if (g_server != nullptr) g_server->stop();
}

struct ServeArgs {
  std::string host = "127.0.0.1", checkpoint, adapter;
  int port = 8080;
};

int cmd_serve(Common c, const ServeArgs& a) {
  if (!a.adapter.empty()) c.overrides.push_back("adapter=\"" + a.adapter + "\"");
  auto cfg = resolve_config(c);
  require_data_dir(cfg);
  service::ServiceConfig sc;
  sc.data_dir = cfg.data_dir;
  sc.working_size = cfg.working_size;
  sc.default_colormap = cfg.colormap;
  sc.adapter = cfg.adapter;
  sc.peak_threshold = cfg.peak_threshold;
  if (!a.checkpoint.empty()) sc.checkpoint = a.checkpoint;
  service::Service svc(sc);
  service::HttpServer server(svc);
  const int port = server.bind(a.host, a.port);
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cout << "serving " << svc.sequences().size() << " sequences on http://" << a.host << ":" << port << std::endl;
  server.listen();
  g_server = nullptr;
  return 0;
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return "ConfigError";
  if (dynamic_cast<const ValidationError*>(&e)) return "ValidationError";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const IOError*>(&e)) return "IOError";
  if (dynamic_cast<const UnknownColormapError*>(&e)) return "UnknownColormapError";
  if (dynamic_cast<const NoSeedAnnotationError*>(&e)) return "NoSeedAnnotationError";
  if (dynamic_cast<const ShapeError*>(&e)) return "ShapeError";
  if (dynamic_cast<const NumericalError*>(&e)) return "NumericalError";
  if (dynamic_cast<const WeightSchemaError*>(&e)) return "WeightSchemaError";
  if (dynamic_cast<const EmptySequenceError*>(&e)) return "EmptySequenceError";
  if (dynamic_cast<const SequenceTooShortError*>(&e)) return "SequenceTooShortError";
  if (dynamic_cast<const ReferenceUnavailableError*>(&e)) return "ReferenceUnavailableError";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return "InternalError";
}

void report_error(const char* kind, const std::string& message) {
  std::cerr << nlohmann::json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pressure-map pose estimation with a trainable image polishing stage"};
  app.name("presspose");
  app.require_subcommand(1);

  Common common;
  std::function<int()> run;

  auto* data = app.add_subcommand("data", "Clean, colorize or synthesize pressure recordings");
  data->require_subcommand(1);
  CleanArgs clean;
  auto* clean_cmd = data->add_subcommand("clean", "Median-filter a recording and drop transition frames");
  add_common(clean_cmd, common, false);
  clean_cmd->add_option("--in", clean.in, "Input frames file")->required();
  clean_cmd->add_option("--out", clean.out, "Output frames file (.txt or .pmat)")->required();
  clean_cmd->add_option("--trim", clean.trim, "Frames dropped at each end (default: data.trim)");
  clean_cmd->add_option("--format", clean.format, "auto, text or binary")
      ->check(CLI::IsMember({"auto", "text", "binary"}));
  clean_cmd->callback([&] { run = [&] { return cmd_data_clean(common, clean); }; });

  ColorizeArgs colorize;
  auto* colorize_cmd = data->add_subcommand("colorize", "Render frames as PNG images");
  add_common(colorize_cmd, common, false);
  colorize_cmd->add_option("--in", colorize.in, "Input frames file")->required();
  colorize_cmd->add_option("--out", colorize.out, "Output directory")->required();
  colorize_cmd->add_option("--colormap", colorize.colormap, "Colormap name (default: data.colormap)");
  colorize_cmd->add_option("--frame", colorize.frame, "Only this timestamp");
  colorize_cmd->callback([&] { run = [&] { return cmd_data_colorize(common, colorize); }; });

  SynthArgs synth;
  auto* synth_cmd = data->add_subcommand("synth", "Write a synthetic annotated data directory");
  add_common(synth_cmd, common, false);
  synth_cmd->add_option("--out", synth.out, "Output data directory")->required();
  synth_cmd->add_option("--subjects", synth.subjects)->check(CLI::Range(1, 13));
  synth_cmd->add_option("--postures", synth.postures)->check(CLI::Range(1, 17));
  synth_cmd->add_option("--frames", synth.frames)->check(CLI::PositiveNumber);
  synth_cmd->add_option("--seed", synth.seed);
  synth_cmd->add_option("--noise", synth.noise, "Sensor noise, mmHg");
  synth_cmd->add_flag("--seeds-only", synth.seeds_only, "Label only the first frame of each sequence");
  synth_cmd->callback([&] { run = [&] { return cmd_data_synth(common, synth); }; });

  auto* annotate = app.add_subcommand("annotate", "Propagate or export keypoint labels");
  annotate->require_subcommand(1);
  std::string sequence;
  auto* prop_cmd = annotate->add_subcommand("propagate", "Copy manual labels to unlabeled frames");
  add_common(prop_cmd, common);
  prop_cmd->add_option("--sequence", sequence, "Sequence id {subject}_{posture}, or all")->required();
  prop_cmd->callback([&] { run = [&] { return cmd_annotate_propagate(common, sequence); }; });
  std::string export_out;
  auto* export_cmd = annotate->add_subcommand("export", "Write the annotation store as JSON");
  add_common(export_cmd, common);
  export_cmd->add_option("--out", export_out, "Output JSON file")->required();
  export_cmd->callback([&] { run = [&] { return cmd_annotate_export(common, export_out); }; });

  TrainArgs train_args;
  auto* train_cmd = app.add_subcommand("train", "Train the polishing network against a frozen pose adapter");
  add_common(train_cmd, common);
  train_cmd->add_option("--adapter", train_args.adapter, "mock[:seed] or weights:<path>");
  train_cmd->add_option("--out", train_args.out, "Output directory")->required();
  train_cmd->add_flag("--loso", train_args.loso, "One model per leave-one-subject-out fold");
  train_cmd->callback([&] { run = [&] { return cmd_train(common, train_args); }; });

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep-lambda", "Train once per pixel-loss weight and compare");
  add_common(sweep_cmd, common);
  sweep_cmd->add_option("--values", sweep.values, "Comma-separated pixel weights");
  sweep_cmd->add_option("--out", sweep.out, "Output directory")->required();
  sweep_cmd->callback([&] { run = [&] { return cmd_sweep(common, sweep); }; });

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "PCK evaluation with and without the polishing stage");
  add_common(eval_cmd, common);
  eval_cmd->add_option("--checkpoint", eval_args.checkpoint, "Checkpoint file, or a directory from train --loso");
  eval_cmd->add_option("--adapter", eval_args.adapter, "mock[:seed] or weights:<path>");
  eval_cmd->add_option("--compare", eval_args.compare, "Second adapter for a four-row comparison");
  eval_cmd->add_option("--compare-checkpoint", eval_args.compare_checkpoint,
                       "Checkpoint(s) trained against the second adapter");
  eval_cmd->add_option("--report", eval_args.report, "Report directory")->required();
  eval_cmd->callback([&] { run = [&] { return cmd_eval(common, eval_args); }; });

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("benchmark-colormaps", "Rank colormaps by adapter-only AUC");
  add_common(bench_cmd, common);
  bench_cmd->add_option("--maps", bench.maps, "all, or comma-separated names");
  bench_cmd->add_option("--adapter", bench.adapter, "mock[:seed] or weights:<path>");
  bench_cmd->add_option("--out", bench.out, "Output directory for colormaps.csv");
  bench_cmd->callback([&] { run = [&] { return cmd_benchmark(common, bench); }; });

  PolishArgs polish_args;
  auto* polish_cmd = app.add_subcommand("polish", "Run a trained polishing network on one image");
  add_common(polish_cmd, common, false);
  polish_cmd->add_option("--checkpoint", polish_args.checkpoint)->required();
  polish_cmd->add_option("--in", polish_args.in, "PNG image or frames file")->required();
  polish_cmd->add_option("--out", polish_args.out, "Output PNG")->required();
  polish_cmd->add_option("--frame", polish_args.frame, "Timestamp when --in is a frames file");
  polish_cmd->add_option("--colormap", polish_args.colormap, "Colormap for frames input");
  polish_cmd->callback([&] { run = [&] { return cmd_polish(common, polish_args); }; });

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "HTTP service for the annotation tool");
  add_common(serve_cmd, common);
  serve_cmd->add_option("--host", serve.host);
  serve_cmd->add_option("--port", serve.port, "0 picks a free port")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--checkpoint", serve.checkpoint, "Polishing network used by /infer");
  serve_cmd->add_option("--adapter", serve.adapter, "mock[:seed] or weights:<path>");
  serve_cmd->callback([&] { run = [&] { return cmd_serve(common, serve); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    return run();
  } catch (const UsageError& e) {
    report_error("UsageError", e.what());
    return 2;
  } catch (const std::exception& e) {
    report_error(error_kind(e), e.what());
    return 1;
  }
}
