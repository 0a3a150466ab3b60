#include "presspose/polishnet.hpp"

#include <algorithm>

namespace presspose::polish {

void PolishNetConfig::validate() const {
  if (encoder_blocks < 1 || decoder_blocks != encoder_blocks) {
    throw ConfigError("polishnet: encoder and decoder need the same positive block count");
  }
  if (convs_per_block < 1) throw ConfigError("polishnet: convs_per_block must be positive");
  if (kernel < 1 || kernel % 2 == 0) throw ConfigError("polishnet: kernel must be odd and positive");
  if (static_cast<int>(channel_widths.size()) != encoder_blocks) {
    throw ConfigError("polishnet: need one channel width per encoder block");
  }
  for (int w : channel_widths)
    if (w < 1) throw ConfigError("polishnet: channel widths must be positive");
  if (working_size.height <= min_extent() || working_size.width <= min_extent()) {
    throw ConfigError("polishnet: working size " + std::to_string(working_size.height) + "x" +
                      std::to_string(working_size.width) + " must exceed " + std::to_string(min_extent()) +
                      " per axis");
  }
  if (!(norm_eps > 0.0) || !(norm_momentum >= 0.0 && norm_momentum < 1.0)) {
    throw ConfigError("polishnet: invalid normalization settings");
  }
}

nlohmann::json PolishNetConfig::to_json() const {
  return {{"encoder_blocks", encoder_blocks},
          {"decoder_blocks", decoder_blocks},
          {"convs_per_block", convs_per_block},
          {"kernel", kernel},
          {"stride", 1},
          {"padding", 0},
          {"leaky_slope", leaky_slope},
          {"channel_widths", channel_widths},
          {"working_size", {working_size.height, working_size.width}},
          {"norm_eps", norm_eps},
          {"norm_momentum", norm_momentum}};
}

PolishNetConfig PolishNetConfig::from_json(const nlohmann::json& j) {
  PolishNetConfig c;
  try {
    c.encoder_blocks = j.value("encoder_blocks", c.encoder_blocks);
    c.decoder_blocks = j.value("decoder_blocks", c.decoder_blocks);
    c.convs_per_block = j.value("convs_per_block", c.convs_per_block);
    c.kernel = j.value("kernel", c.kernel);
    c.leaky_slope = j.value("leaky_slope", c.leaky_slope);
    c.channel_widths = j.value("channel_widths", c.channel_widths);
    if (j.contains("working_size")) {
      c.working_size = {j.at("working_size").at(0).get<int>(), j.at("working_size").at(1).get<int>()};
    }
    c.norm_eps = j.value("norm_eps", c.norm_eps);
    c.norm_momentum = j.value("norm_momentum", c.norm_momentum);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("polishnet config: ") + e.what());
  }
  c.validate();
  return c;
}

namespace {

std::vector<float> to_vector(const auto& m) { return std::vector<float>(m.data(), m.data() + m.size()); }

template <typename Fn>
void for_each_stored(const PolishNetParams<float>& p, Fn&& fn) {
  auto visit = [&](const std::vector<Block<float>>& blocks, const char* prefix, const char* conv_name) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const std::string base = std::string(prefix) + std::to_string(b) + ".";
      for (std::size_t i = 0; i < blocks[b].convs.size(); ++i) {
        const auto& c = blocks[b].convs[i];
        const std::int64_t k = c.kernel;
        const std::int64_t rows = c.weight.rows();
        const std::int64_t second = c.weight.cols() / (k * k);
        const std::string name = base + conv_name + std::to_string(i) + ".";
        fn(name + "weight", std::vector<std::int64_t>{rows, second, k, k}, to_vector(c.weight));
        fn(name + "bias", std::vector<std::int64_t>{c.bias.size()}, to_vector(c.bias));
      }
      const auto& n = blocks[b].norm;
      const std::vector<std::int64_t> shape{n.scale.size()};
      fn(base + "norm.scale", shape, to_vector(n.scale));
      fn(base + "norm.shift", shape, to_vector(n.shift));
      fn(base + "norm.running_mean", shape, to_vector(n.running_mean));
      fn(base + "norm.running_var", shape, to_vector(n.running_var));
    }
  };
  visit(p.encoder, "enc", "conv");
  visit(p.decoder, "dec", "deconv");
}

void copy_into(auto& dst, const NamedArray& src, const std::string& name) {
  if (static_cast<std::int64_t>(src.values.size()) != static_cast<std::int64_t>(dst.size())) {
    throw WeightSchemaError("checkpoint: " + name + " has " + std::to_string(src.values.size()) + " values, expected " +
                            std::to_string(dst.size()));
  }
  std::copy(src.values.begin(), src.values.end(), dst.data());
}

}  // namespace

NamedArrays to_named_arrays(const PolishNetParams<float>& params) {
  NamedArrays out;
  out.meta = {{"kind", "polishnet"}, {"config", params.config.to_json()}};
  for_each_stored(params, [&](const std::string& name, std::vector<std::int64_t> shape, std::vector<float> values) {
    out.put(name, std::move(shape), std::move(values));
  });
  return out;
}

PolishNetParams<float> params_from_named_arrays(const NamedArrays& arrays) {
  if (arrays.meta.value("kind", "") != "polishnet") throw WeightSchemaError("checkpoint: not a polishnet checkpoint");
  const auto config = PolishNetConfig::from_json(arrays.meta.at("config"));
  auto params = init_params<float>(config, 0);
  auto load = [&](std::vector<Block<float>>& blocks, const char* prefix, const char* conv_name) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const std::string base = std::string(prefix) + std::to_string(b) + ".";
      for (std::size_t i = 0; i < blocks[b].convs.size(); ++i) {
        const std::string name = base + conv_name + std::to_string(i) + ".";
        copy_into(blocks[b].convs[i].weight, arrays.at(name + "weight"), name + "weight");
        copy_into(blocks[b].convs[i].bias, arrays.at(name + "bias"), name + "bias");
      }
      auto& n = blocks[b].norm;
      copy_into(n.scale, arrays.at(base + "norm.scale"), base + "norm.scale");
      copy_into(n.shift, arrays.at(base + "norm.shift"), base + "norm.shift");
      copy_into(n.running_mean, arrays.at(base + "norm.running_mean"), base + "norm.running_mean");
      copy_into(n.running_var, arrays.at(base + "norm.running_var"), base + "norm.running_var");
    }
  };
  load(params.encoder, "enc", "conv");
  load(params.decoder, "dec", "deconv");
  require_finite(params);
  return params;
}

void save_checkpoint(const PolishNetParams<float>& params, const std::filesystem::path& path,
                     const nlohmann::json& extra_meta) {
  auto arrays = to_named_arrays(params);
  for (auto it = extra_meta.begin(); it != extra_meta.end(); ++it) arrays.meta[it.key()] = it.value();
  save_named_arrays(arrays, path);
}

PolishNetParams<float> load_checkpoint(const std::filesystem::path& path) {
  return params_from_named_arrays(load_named_arrays(path));
}

std::uint64_t checksum(const PolishNetParams<float>& params) {
  std::uint64_t h = 1469598103934665603ULL;
  for_each_stored(params, [&](const std::string&, const std::vector<std::int64_t>&, const std::vector<float>& values) {
    const auto* bytes = reinterpret_cast<const unsigned char*>(values.data());
    for (std::size_t i = 0; i < values.size() * sizeof(float); ++i) {
      h ^= bytes[i];
      h *= 1099511628211ULL;
    }
  });
  return h;
}

}  // namespace presspose::polish
