#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace presspose::data {

inline constexpr int kGridWidth = 32;
inline constexpr int kGridHeight = 64;
inline constexpr int kSensorCount = kGridWidth * kGridHeight;
inline constexpr float kMaxPressure = 100.0f;  // mmHg, calibrated upper bound

inline constexpr int kSubjectCount = 13;
inline constexpr int kPostureCount = 17;

/// One mat reading. Rows run head to foot (64), columns across the bed (32),
/// so a frame is already in portrait orientation.
using PressureGrid = Eigen::Matrix<float, kGridHeight, kGridWidth, Eigen::RowMajor>;

struct PressureFrame {
  PressureGrid values = PressureGrid::Zero();
  int timestamp_index = 0;
};

struct SequenceMeta {
  int subject_id = 1;
  int posture_id = 1;
  double sample_rate_hz = 1.0;
};

struct PressureSequence {
  std::vector<PressureFrame> frames;
  SequenceMeta meta;

  std::size_t size() const { return frames.size(); }
  /// "{subject}_{posture}", the key used by the service and annotation files.
  std::string id() const;
  /// Throws ValidationError when a type invariant does not hold.
  void validate() const;
};

std::string sequence_id(int subject_id, int posture_id);

/// Parses one frame per line, 2048 whitespace- or comma-separated values in
/// row-major order over the 64 x 32 grid. Values are clamped to [0, 100].
PressureSequence parse_text_frames(std::istream& in, const SequenceMeta& meta);
void write_text_frames(std::ostream& out, const PressureSequence& seq);

/// "PMAT1" container: u32 frame_count, u32 width, u32 height, then f32 values.
std::vector<std::uint8_t> encode_binary(const PressureSequence& seq);
PressureSequence decode_binary(const std::vector<std::uint8_t>& bytes, const SequenceMeta& meta);

enum class FileFormat { kText, kBinary };

std::filesystem::path sidecar_path(const std::filesystem::path& frames_path);
SequenceMeta load_meta(const std::filesystem::path& sidecar);
void save_meta(const SequenceMeta& meta, const std::filesystem::path& sidecar);

/// Loads text or binary frames (detected by magic) and the JSON sidecar.
PressureSequence load_sequence(const std::filesystem::path& path);
PressureSequence load_sequence(const std::filesystem::path& path, const SequenceMeta& meta);
void save_sequence(const PressureSequence& seq, const std::filesystem::path& path, FileFormat format);

/// 3x3x3 spatiotemporal median with replicate padding in space and time.
PressureSequence median_filter_3d(const PressureSequence& seq);

/// Drops the first and last `n` frames.
PressureSequence trim_transitions(const PressureSequence& seq, int n = 3);

}  // namespace presspose::data
