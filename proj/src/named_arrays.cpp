#include "presspose/named_arrays.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <numeric>

#include "presspose/errors.hpp"

namespace presspose {

namespace {

constexpr char kMagic[4] = {'P', 'P', 'N', 'A'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_le(const std::vector<std::uint8_t>& in, std::size_t pos, int bytes) {
  if (pos + bytes > in.size()) throw ParseError("named arrays: truncated container");
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(in[pos + i]) << (8 * i);
  return v;
}

}  // namespace

std::int64_t NamedArray::element_count() const {
  return std::accumulate(shape.begin(), shape.end(), std::int64_t{1}, std::multiplies<>());
}

const NamedArray& NamedArrays::at(const std::string& name) const {
  auto it = arrays.find(name);
  if (it == arrays.end()) throw WeightSchemaError("missing array: " + name);
  return it->second;
}

void NamedArrays::put(const std::string& name, std::vector<std::int64_t> shape, std::vector<float> values) {
  NamedArray a{std::move(shape), std::move(values)};
  if (a.element_count() != static_cast<std::int64_t>(a.values.size())) {
    throw ShapeError("named arrays: " + name + " shape does not match value count");
  }
  arrays[name] = std::move(a);
}

std::vector<std::uint8_t> encode_named_arrays(const NamedArrays& arrays) {
  nlohmann::json index = nlohmann::json::array();
  std::uint64_t offset = 0;
  for (const auto& [name, array] : arrays.arrays) {
    index.push_back({{"name", name}, {"shape", array.shape}, {"offset", offset}});
    offset += array.values.size();
  }
  const std::string header = nlohmann::json{{"meta", arrays.meta}, {"arrays", index}}.dump();

  std::vector<std::uint8_t> out(kMagic, kMagic + 4);
  put_u32(out, NamedArrays::kVersion);
  put_u64(out, header.size());
  out.insert(out.end(), header.begin(), header.end());
  out.reserve(out.size() + offset * 4);
  for (const auto& [name, array] : arrays.arrays)
    for (float v : array.values) put_u32(out, std::bit_cast<std::uint32_t>(v));
  return out;
}

NamedArrays decode_named_arrays(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 16 || std::memcmp(bytes.data(), kMagic, 4) != 0) throw ParseError("named arrays: bad magic");
  const auto version = static_cast<std::uint32_t>(get_le(bytes, 4, 4));
  if (version != NamedArrays::kVersion) {
    throw ParseError("named arrays: unsupported version " + std::to_string(version));
  }
  const auto header_len = get_le(bytes, 8, 8);
  if (16 + header_len > bytes.size()) throw ParseError("named arrays: truncated header");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(bytes.begin() + 16, bytes.begin() + 16 + static_cast<std::ptrdiff_t>(header_len));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("named arrays: header: ") + e.what());
  }
  const std::size_t payload = 16 + header_len;

  NamedArrays out;
  out.meta = header.value("meta", nlohmann::json::object());
  for (const auto& entry : header.at("arrays")) {
    NamedArray a;
    a.shape = entry.at("shape").get<std::vector<std::int64_t>>();
    const auto offset = entry.at("offset").get<std::uint64_t>();
    const auto count = static_cast<std::size_t>(a.element_count());
    a.values.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
      a.values[i] = std::bit_cast<float>(static_cast<std::uint32_t>(get_le(bytes, payload + 4 * (offset + i), 4)));
    }
    out.arrays[entry.at("name").get<std::string>()] = std::move(a);
  }
  return out;
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IOError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IOError("write failed: " + path.string());
}

void save_named_arrays(const NamedArrays& arrays, const std::filesystem::path& path) {
  write_file_bytes(path, encode_named_arrays(arrays));
}

NamedArrays load_named_arrays(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw IOError("no such file: " + path.string());
  return decode_named_arrays(read_file_bytes(path));
}

}  // namespace presspose
