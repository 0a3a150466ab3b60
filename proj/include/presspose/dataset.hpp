#pragma once

// Annotated frames and their colorized counterparts.

#include <filesystem>
#include <vector>

#include "presspose/annotation.hpp"
#include "presspose/colormap.hpp"
#include "presspose/pressure.hpp"
#include "presspose/skeleton.hpp"
#include "presspose/tensor.hpp"

namespace presspose::data {

/// A cleaned pressure frame with its label.
struct LabeledFrame {
  PressureFrame pressure;
  KeypointSet keypoints;  // working-resolution pixels; keypoints.frame identifies the frame

  const FrameRef& frame() const { return keypoints.frame; }
};

/// Colorized image at working resolution and its label in the same pixel grid.
struct Sample {
  FrameRef frame;
  ColorImage image;
  KeypointSet keypoints;
};

/// Data directory layout: one frames file per sequence ("*.txt" or "*.pmat")
/// with a JSON sidecar of the same stem, plus "annotations.json".
inline constexpr const char* kAnnotationFile = "annotations.json";

/// Every sequence in `dir`, sorted by subject then posture.
std::vector<PressureSequence> load_sequence_dir(const std::filesystem::path& dir);

/// Joins sequences with stored labels; frames without a record are skipped.
std::vector<LabeledFrame> labeled_frames(const std::vector<PressureSequence>& sequences,
                                         const annotation::AnnotationStore& store);

std::vector<Sample> make_samples(const std::vector<LabeledFrame>& frames, const Colormap& map, ImageSize size);

/// Samples whose subject is (or, with `exclude`, is not) in `subjects`.
std::vector<Sample> filter_subjects(const std::vector<Sample>& samples, const std::vector<int>& subjects,
                                    bool exclude = false);

}  // namespace presspose::data
