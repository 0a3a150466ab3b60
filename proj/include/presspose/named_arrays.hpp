#pragma once

// Versioned container of named float arrays plus a JSON metadata block.
//
// Layout (all integers little-endian):
//   bytes 0..3   "PPNA"
//   u32          format version (1)
//   u64          header length in bytes
//   header       UTF-8 JSON: {"meta": {...}, "arrays": [{"name", "shape", "offset"}...]}
//   payload      concatenated little-endian f32 values; "offset" counts floats
//                from the start of the payload

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace presspose {

struct NamedArray {
  std::vector<std::int64_t> shape;
  std::vector<float> values;

  std::int64_t element_count() const;
};

struct NamedArrays {
  static constexpr std::uint32_t kVersion = 1;

  nlohmann::json meta = nlohmann::json::object();
  std::map<std::string, NamedArray> arrays;

  const NamedArray& at(const std::string& name) const;
  void put(const std::string& name, std::vector<std::int64_t> shape, std::vector<float> values);
};

std::vector<std::uint8_t> encode_named_arrays(const NamedArrays& arrays);
NamedArrays decode_named_arrays(const std::vector<std::uint8_t>& bytes);

void save_named_arrays(const NamedArrays& arrays, const std::filesystem::path& path);
NamedArrays load_named_arrays(const std::filesystem::path& path);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);

}  // namespace presspose
