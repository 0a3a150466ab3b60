#include "presspose/pressure.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "presspose/errors.hpp"
#include "presspose/named_arrays.hpp"

namespace presspose::data {

namespace {

constexpr char kBinaryMagic[5] = {'P', 'M', 'A', 'T', '1'};

float clamp_pressure(float v) { return std::clamp(v, 0.0f, kMaxPressure); }

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(const std::vector<std::uint8_t>& in, std::size_t pos) {
  if (pos + 4 > in.size()) throw ParseError("PMAT1: truncated");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(in[pos + i]) << (8 * i);
  return v;
}

bool has_binary_magic(const std::vector<std::uint8_t>& bytes) {
  return bytes.size() >= 5 && std::memcmp(bytes.data(), kBinaryMagic, 5) == 0;
}

}  // namespace

std::string sequence_id(int subject_id, int posture_id) {
  return std::to_string(subject_id) + "_" + std::to_string(posture_id);
}

std::string PressureSequence::id() const { return sequence_id(meta.subject_id, meta.posture_id); }

void PressureSequence::validate() const {
  if (meta.subject_id < 1 || meta.subject_id > kSubjectCount) {
    throw ValidationError("subject_id out of range: " + std::to_string(meta.subject_id));
  }
  if (meta.posture_id < 1 || meta.posture_id > kPostureCount) {
    throw ValidationError("posture_id out of range: " + std::to_string(meta.posture_id));
  }
  for (std::size_t i = 0; i < frames.size(); ++i) {
    if (i > 0 && frames[i].timestamp_index <= frames[i - 1].timestamp_index) {
      throw ValidationError("timestamps not strictly increasing at frame " + std::to_string(i));
    }
    if (!frames[i].values.allFinite() || frames[i].values.minCoeff() < 0.0f) {
      throw ValidationError("frame " + std::to_string(i) + ": values must be finite and non-negative");
    }
  }
}

PressureSequence parse_text_frames(std::istream& in, const SequenceMeta& meta) {
  PressureSequence seq;
  seq.meta = meta;
  std::string line;
  int frame = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
    PressureFrame f;
    f.timestamp_index = frame;
    int count = 0;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t' || *p == ',' || *p == '\r')) ++p;
      if (p >= end) break;
      float v = 0.0f;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc()) {
        throw ParseError("frame " + std::to_string(frame) + ": non-numeric value");
      }
      if (!std::isfinite(v)) throw ParseError("frame " + std::to_string(frame) + ": non-finite value");
      if (count < kSensorCount) f.values.data()[count] = clamp_pressure(v);
      ++count;
      p = next;
    }
    if (count != kSensorCount) {
      throw ParseError("frame " + std::to_string(frame) + ": expected 2048 values");
    }
    seq.frames.push_back(std::move(f));
    ++frame;
  }
  if (seq.frames.empty()) throw EmptySequenceError();
  return seq;
}

void write_text_frames(std::ostream& out, const PressureSequence& seq) {
  std::array<char, 32> buf{};
  for (const auto& f : seq.frames) {
    for (int i = 0; i < kSensorCount; ++i) {
      auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), f.values.data()[i]);
      if (i > 0) out.put(' ');
      out.write(buf.data(), end - buf.data());
    }
    out.put('\n');
  }
}

std::vector<std::uint8_t> encode_binary(const PressureSequence& seq) {
  std::vector<std::uint8_t> out(kBinaryMagic, kBinaryMagic + 5);
  put_u32(out, static_cast<std::uint32_t>(seq.frames.size()));
  put_u32(out, kGridWidth);
  put_u32(out, kGridHeight);
  out.reserve(out.size() + seq.frames.size() * kSensorCount * 4);
  for (const auto& f : seq.frames)
    for (int i = 0; i < kSensorCount; ++i) put_u32(out, std::bit_cast<std::uint32_t>(f.values.data()[i]));
  return out;
}

PressureSequence decode_binary(const std::vector<std::uint8_t>& bytes, const SequenceMeta& meta) {
  if (!has_binary_magic(bytes)) throw ParseError("PMAT1: bad magic");
  const std::uint32_t count = get_u32(bytes, 5);
  const std::uint32_t width = get_u32(bytes, 9);
  const std::uint32_t height = get_u32(bytes, 13);
  if (width != kGridWidth || height != kGridHeight) {
    throw ParseError("PMAT1: grid " + std::to_string(width) + "x" + std::to_string(height) + ", expected 32x64");
  }
  if (count == 0) throw EmptySequenceError();
  const std::size_t base = 17;
  if (bytes.size() != base + static_cast<std::size_t>(count) * kSensorCount * 4) {
    throw ParseError("PMAT1: payload size does not match frame count");
  }
  PressureSequence seq;
  seq.meta = meta;
  seq.frames.resize(count);
  for (std::uint32_t t = 0; t < count; ++t) {
    seq.frames[t].timestamp_index = static_cast<int>(t);
    for (int i = 0; i < kSensorCount; ++i) {
      const float v = std::bit_cast<float>(get_u32(bytes, base + (static_cast<std::size_t>(t) * kSensorCount + i) * 4));
      if (!std::isfinite(v)) throw ParseError("frame " + std::to_string(t) + ": non-finite value");
      seq.frames[t].values.data()[i] = clamp_pressure(v);
    }
  }
  return seq;
}

std::filesystem::path sidecar_path(const std::filesystem::path& frames_path) {
  auto p = frames_path;
  p.replace_extension(".json");
  return p;
}

SequenceMeta load_meta(const std::filesystem::path& sidecar) {
  std::ifstream in(sidecar);
  if (!in) throw IOError("cannot open metadata " + sidecar.string());
  try {
    const auto j = nlohmann::json::parse(in);
    SequenceMeta m;
    m.subject_id = j.at("subject_id").get<int>();
    m.posture_id = j.at("posture_id").get<int>();
    m.sample_rate_hz = j.value("sample_rate_hz", 1.0);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("metadata " + sidecar.string() + ": " + e.what());
  }
}

void save_meta(const SequenceMeta& meta, const std::filesystem::path& sidecar) {
  std::ofstream out(sidecar);
  if (!out) throw IOError("cannot write " + sidecar.string());
  out << nlohmann::json{{"subject_id", meta.subject_id},
                        {"posture_id", meta.posture_id},
                        {"sample_rate_hz", meta.sample_rate_hz}}
             .dump(2)
      << '\n';
}

PressureSequence load_sequence(const std::filesystem::path& path, const SequenceMeta& meta) {
  const auto bytes = read_file_bytes(path);
  PressureSequence seq;
  if (has_binary_magic(bytes)) {
    seq = decode_binary(bytes, meta);
  } else {
    std::istringstream in(std::string(bytes.begin(), bytes.end()));
    seq = parse_text_frames(in, meta);
  }
  seq.validate();
  return seq;
}

PressureSequence load_sequence(const std::filesystem::path& path) {
  return load_sequence(path, load_meta(sidecar_path(path)));
}

void save_sequence(const PressureSequence& seq, const std::filesystem::path& path, FileFormat format) {
  if (format == FileFormat::kBinary) {
    write_file_bytes(path, encode_binary(seq));
  } else {
    std::ofstream out(path);
    if (!out) throw IOError("cannot write " + path.string());
    write_text_frames(out, seq);
  }
  save_meta(seq.meta, sidecar_path(path));
}

PressureSequence median_filter_3d(const PressureSequence& seq) {
  if (seq.frames.empty()) throw EmptySequenceError();
  const int n = static_cast<int>(seq.frames.size());
  PressureSequence out = seq;
  std::array<float, 27> window{};
  for (int t = 0; t < n; ++t) {
    for (int y = 0; y < kGridHeight; ++y) {
      for (int x = 0; x < kGridWidth; ++x) {
        int k = 0;
        for (int dt = -1; dt <= 1; ++dt) {
          const auto& grid = seq.frames[std::clamp(t + dt, 0, n - 1)].values;
          for (int dy = -1; dy <= 1; ++dy) {
            const int yy = std::clamp(y + dy, 0, kGridHeight - 1);
            for (int dx = -1; dx <= 1; ++dx) window[k++] = grid(yy, std::clamp(x + dx, 0, kGridWidth - 1));
          }
        }
        std::nth_element(window.begin(), window.begin() + 13, window.end());
        out.frames[t].values(y, x) = window[13];
      }
    }
  }
  return out;
}

PressureSequence trim_transitions(const PressureSequence& seq, int n) {
  if (n < 0) throw SequenceTooShortError("negative trim count");
  if (seq.frames.size() <= static_cast<std::size_t>(2 * n)) {
    throw SequenceTooShortError("sequence of " + std::to_string(seq.frames.size()) + " frames cannot lose " +
                                std::to_string(n) + " frames at each end");
  }
  PressureSequence out;
  out.meta = seq.meta;
  out.frames.assign(seq.frames.begin() + n, seq.frames.end() - n);
  return out;
}

}  // namespace presspose::data
