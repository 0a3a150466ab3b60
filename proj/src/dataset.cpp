#include "presspose/dataset.hpp"

#include <algorithm>
#include <utility>

#include "presspose/errors.hpp"

namespace presspose::data {

std::vector<PressureSequence> load_sequence_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw IOError("not a data directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".txt" || ext == ".pmat")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<PressureSequence> out;
  for (const auto& f : files) out.push_back(load_sequence(f));
  std::stable_sort(out.begin(), out.end(), [](const PressureSequence& a, const PressureSequence& b) {
    return std::pair(a.meta.subject_id, a.meta.posture_id) < std::pair(b.meta.subject_id, b.meta.posture_id);
  });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].id() == out[i - 1].id()) throw ValidationError("duplicate sequence " + out[i].id() + " in " + dir.string());
  }
  return out;
}

std::vector<LabeledFrame> labeled_frames(const std::vector<PressureSequence>& sequences,
                                         const annotation::AnnotationStore& store) {
  std::vector<LabeledFrame> out;
  for (const auto& seq : sequences) {
    for (const auto& f : seq.frames) {
      const FrameRef ref{seq.meta.subject_id, seq.meta.posture_id, f.timestamp_index};
      const auto* rec = store.find(ref);
      if (rec == nullptr) continue;
      LabeledFrame lf{f, rec->keypoints};
      lf.keypoints.frame = ref;
      out.push_back(std::move(lf));
    }
  }
  return out;
}

std::vector<Sample> make_samples(const std::vector<LabeledFrame>& frames, const Colormap& map, ImageSize size) {
  std::vector<Sample> out;
  out.reserve(frames.size());
  for (const auto& f : frames) out.push_back({f.frame(), colorize(f.pressure, map, size), f.keypoints});
  return out;
}

std::vector<Sample> filter_subjects(const std::vector<Sample>& samples, const std::vector<int>& subjects,
                                    bool exclude) {
  std::vector<Sample> out;
  for (const auto& s : samples) {
    const bool member = std::find(subjects.begin(), subjects.end(), s.frame.subject_id) != subjects.end();
    if (member != exclude) out.push_back(s);
  }
  return out;
}

}  // namespace presspose::data
