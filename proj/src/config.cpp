#include "presspose/config.hpp"

#define TOML_EXCEPTIONS 1
#include <toml.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "presspose/errors.hpp"

namespace presspose::config {

namespace {

toml::array int_array(const std::vector<int>& v) {
  toml::array a;
  for (int x : v) a.push_back(x);
  return a;
}

toml::table to_table(const RunConfig& c) {
  toml::table t;
  t.insert("adapter", c.adapter);
  t.insert("init_seed", static_cast<std::int64_t>(c.init_seed));
  t.insert("data", toml::table{{"dir", c.data_dir.string()},
                               {"colormap", c.colormap},
                               {"working_size", int_array({c.working_size.height, c.working_size.width})},
                               {"trim", c.trim}});
  t.insert("targets", toml::table{{"sigma", c.targets.sigma},
                                  {"limb_width", c.targets.limb_width},
                                  {"peak_threshold", c.peak_threshold}});
  t.insert("loss", toml::table{{"lambda_heatmap", c.weights.heatmap},
                               {"lambda_paf", c.weights.paf},
                               {"lambda_pixel", c.weights.pixel}});
  const auto& tr = c.train;
  t.insert("train", toml::table{{"learning_rate", tr.learning_rate},
                                {"decay_rate", tr.decay_rate},
                                {"decay_every", tr.decay_every},
                                {"beta1", tr.beta1},
                                {"beta2", tr.beta2},
                                {"epsilon", tr.epsilon},
                                {"batch_size", tr.batch_size},
                                {"max_iterations", tr.max_iterations},
                                {"seed", static_cast<std::int64_t>(tr.seed)},
                                {"eval_every", tr.eval_every},
                                {"patience", tr.patience},
                                {"recalibrate_norm", tr.recalibrate_norm},
                                {"single_producer", tr.single_producer}});
  const auto& p = c.polish;
  t.insert("polishnet", toml::table{{"encoder_blocks", p.encoder_blocks},
                                    {"decoder_blocks", p.decoder_blocks},
                                    {"convs_per_block", p.convs_per_block},
                                    {"kernel", p.kernel},
                                    {"leaky_slope", p.leaky_slope},
                                    {"channel_widths", int_array(p.channel_widths)},
                                    {"norm_eps", p.norm_eps},
                                    {"norm_momentum", p.norm_momentum}});
  t.insert("split", toml::table{{"holdout", c.holdout}, {"seed", static_cast<std::int64_t>(c.split_seed)}});
  return t;
}

// Reads typed values and records which keys were consumed.
class Reader {
 public:
  explicit Reader(const toml::table& t) : root_(t) {}

  template <typename T>
  void get(const std::string& section, const std::string& key, T& out) {
    const std::string path = section.empty() ? key : section + "." + key;
    used_.insert(path);
    const toml::node* node = nullptr;
    if (section.empty()) {
      node = root_.get(key);
    } else if (const auto* sec = root_.get_as<toml::table>(section)) {
      node = sec->get(key);
    }
    if (node == nullptr) return;
    if constexpr (std::is_same_v<T, std::vector<int>>) {
      const auto* arr = node->as_array();
      if (arr == nullptr) throw ConfigError(path + ": expected an array of integers");
      out.clear();
      for (const auto& el : *arr) {
        const auto v = el.value<std::int64_t>();
        if (!v) throw ConfigError(path + ": expected an array of integers");
        out.push_back(static_cast<int>(*v));
      }
    } else if constexpr (std::is_same_v<T, bool>) {
      const auto v = node->value_exact<bool>();
      if (!v) throw ConfigError(path + ": expected true or false");
      out = *v;
    } else if constexpr (std::is_same_v<T, std::string>) {
      const auto v = node->value_exact<std::string>();
      if (!v) throw ConfigError(path + ": expected a string");
      out = *v;
    } else if constexpr (std::is_floating_point_v<T>) {
      const auto v = node->value<double>();
      if (!v || node->is_boolean()) throw ConfigError(path + ": expected a number");
      out = *v;
    } else {
      const auto v = node->value_exact<std::int64_t>();
      if (!v) throw ConfigError(path + ": expected an integer");
      if constexpr (std::is_unsigned_v<T>) {
        if (*v < 0) throw ConfigError(path + ": must be non-negative");
      }
      out = static_cast<T>(*v);
    }
  }

  void reject_unknown() const {
    for (const auto& [k, v] : root_) {
      const std::string key(k.str());
      if (const auto* sec = v.as_table()) {
        for (const auto& [k2, v2] : *sec) {
          const std::string path = key + "." + std::string(k2.str());
          if (!used_.count(path)) throw ConfigError("unknown config key: " + path);
        }
      } else if (!used_.count(key)) {
        throw ConfigError("unknown config key: " + key);
      }
    }
  }

 private:
  const toml::table& root_;
  std::set<std::string> used_;
};

RunConfig from_table(const toml::table& t) {
  RunConfig c;
  Reader r(t);
  std::string dir;
  std::vector<int> size{c.working_size.height, c.working_size.width};
  r.get("", "adapter", c.adapter);
  r.get("", "init_seed", c.init_seed);
  r.get("data", "dir", dir);
  r.get("data", "colormap", c.colormap);
  r.get("data", "working_size", size);
  r.get("data", "trim", c.trim);
  r.get("targets", "sigma", c.targets.sigma);
  r.get("targets", "limb_width", c.targets.limb_width);
  r.get("targets", "peak_threshold", c.peak_threshold);
  r.get("loss", "lambda_heatmap", c.weights.heatmap);
  r.get("loss", "lambda_paf", c.weights.paf);
  r.get("loss", "lambda_pixel", c.weights.pixel);
  auto& tr = c.train;
  r.get("train", "learning_rate", tr.learning_rate);
  r.get("train", "decay_rate", tr.decay_rate);
  r.get("train", "decay_every", tr.decay_every);
  r.get("train", "beta1", tr.beta1);
  r.get("train", "beta2", tr.beta2);
  r.get("train", "epsilon", tr.epsilon);
  r.get("train", "batch_size", tr.batch_size);
  r.get("train", "max_iterations", tr.max_iterations);
  r.get("train", "seed", tr.seed);
  r.get("train", "eval_every", tr.eval_every);
  r.get("train", "patience", tr.patience);
  r.get("train", "recalibrate_norm", tr.recalibrate_norm);
  r.get("train", "single_producer", tr.single_producer);
  auto& p = c.polish;
  r.get("polishnet", "encoder_blocks", p.encoder_blocks);
  r.get("polishnet", "decoder_blocks", p.decoder_blocks);
  r.get("polishnet", "convs_per_block", p.convs_per_block);
  r.get("polishnet", "kernel", p.kernel);
  r.get("polishnet", "leaky_slope", p.leaky_slope);
  r.get("polishnet", "channel_widths", p.channel_widths);
  r.get("polishnet", "norm_eps", p.norm_eps);
  r.get("polishnet", "norm_momentum", p.norm_momentum);
  r.get("split", "holdout", c.holdout);
  r.get("split", "seed", c.split_seed);
  r.reject_unknown();
  if (size.size() != 2) throw ConfigError("data.working_size: expected [height, width]");
  c.working_size = {size[0], size[1]};
  c.data_dir = dir;
  c.polish.working_size = c.working_size;
  c.validate();
  return c;
}

toml::table parse_table(const std::string& text, const std::string& source) {
  try {
    return toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << source << ": " << e.description() << " (line " << e.source().begin.line << ")";
    throw ConfigError(msg.str());
  }
}

}  // namespace

void RunConfig::validate() const {
  if (working_size.height < 1 || working_size.width < 1) throw ConfigError("data.working_size must be positive");
  if (trim < 0) throw ConfigError("data.trim must be non-negative");
  if (targets.sigma < 0.0 || targets.limb_width < 0.0) throw ConfigError("targets: sigma and limb_width must be >= 0");
  if (!(peak_threshold >= 0.0)) throw ConfigError("targets.peak_threshold must be >= 0");
  if (holdout < 0) throw ConfigError("split.holdout must be >= 0");
  weights.validate();
  train.validate();
  polish_config().validate();
}

polish::PolishNetConfig RunConfig::polish_config() const {
  polish::PolishNetConfig p = polish;
  p.working_size = working_size;
  return p;
}

RunConfig parse_run_config(const std::string& toml_text) { return from_table(parse_table(toml_text, "config")); }

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot read config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return from_table(parse_table(text.str(), path.string()));
}

std::string to_toml(const RunConfig& config) {
  std::ostringstream out;
  out << to_table(config) << '\n';
  return out.str();
}

void apply_overrides(RunConfig& config, const std::vector<std::string>& overrides) {
  if (overrides.empty()) return;
  toml::table t = to_table(config);
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("override '" + o + "': expected key=value");
    const std::string key = o.substr(0, eq);
    const std::string value = o.substr(eq + 1);
    toml::table parsed = parse_table("v = " + value, "override " + key);
    const auto dot = key.find('.');
    toml::table* target = &t;
    std::string leaf = key;
    if (dot != std::string::npos) {
      const std::string section = key.substr(0, dot);
      leaf = key.substr(dot + 1);
      target = t.get_as<toml::table>(section);
      if (target == nullptr) throw ConfigError("unknown config key: " + key);
    }
    if (!target->contains(leaf)) throw ConfigError("unknown config key: " + key);
    target->insert_or_assign(leaf, *parsed.get("v"));
  }
  config = from_table(t);
}

std::filesystem::path write_effective_config(const RunConfig& config, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IOError("cannot create " + dir.string() + ": " + ec.message());
  const auto path = dir / "effective_config.toml";
  std::ofstream out(path, std::ios::binary);
  out << to_toml(config);
  if (!out) throw IOError("cannot write " + path.string());
  return path;
}

}  // namespace presspose::config
