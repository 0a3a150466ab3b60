#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <map>
#include <optional>

#include "presspose/pressure.hpp"
#include "presspose/skeleton.hpp"
#include "presspose/tensor.hpp"

namespace presspose::annotation {

/// Where a record came from: a human label, or a copy of a manual label.
struct Provenance {
  std::optional<FrameRef> propagated_from;

  bool manual() const { return !propagated_from.has_value(); }
  bool operator==(const Provenance&) const = default;
};

struct AnnotationRecord {
  KeypointSet keypoints;
  Provenance provenance;

  bool operator==(const AnnotationRecord&) const = default;
};

/// Keypoint labels keyed by frame. Coordinates are working-resolution pixels
/// and visible points must fall inside `bounds`.
class AnnotationStore {
 public:
  explicit AnnotationStore(ImageSize bounds = {}) : bounds_(bounds) {}

  ImageSize bounds() const { return bounds_; }
  const std::map<FrameRef, AnnotationRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  const AnnotationRecord* find(const FrameRef& ref) const;

  /// Stores `ks` as a manual record, replacing whatever was there.
  void put(const KeypointSet& ks);
  void put_record(const AnnotationRecord& record);

  bool operator==(const AnnotationStore& o) const { return bounds_ == o.bounds_ && records_ == o.records_; }

 private:
  ImageSize bounds_;
  std::map<FrameRef, AnnotationRecord> records_;
};

/// Throws ValidationError naming the first visible part outside `bounds`.
void validate_keypoints(const KeypointSet& ks, ImageSize bounds);

AnnotationStore put_annotation(AnnotationStore store, const KeypointSet& ks);

/// Sum of squared differences over raw pressure values.
double frame_sse(const data::PressureFrame& a, const data::PressureFrame& b);

/// Labels every frame of `seq` lacking a manual record with a copy of the
/// manual seed whose frame has the smallest SSE; ties go to the lower
/// timestamp. Manual records are left untouched.
AnnotationStore propagate(AnnotationStore store, const data::PressureSequence& seq);

nlohmann::json record_to_json(const AnnotationRecord& record);
AnnotationRecord record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AnnotationStore& store);
AnnotationStore store_from_json(const nlohmann::json& j, ImageSize bounds);

void save_annotations(const AnnotationStore& store, const std::filesystem::path& path);
AnnotationStore load_annotations(const std::filesystem::path& path, ImageSize bounds);

}  // namespace presspose::annotation
