#include "presspose/annotation.hpp"

#include <fstream>
#include <limits>

#include "presspose/errors.hpp"

namespace presspose::annotation {

const AnnotationRecord* AnnotationStore::find(const FrameRef& ref) const {
  auto it = records_.find(ref);
  return it == records_.end() ? nullptr : &it->second;
}

void AnnotationStore::put(const KeypointSet& ks) {
  validate_keypoints(ks, bounds_);
  records_[ks.frame] = AnnotationRecord{ks, Provenance{}};
}

void AnnotationStore::put_record(const AnnotationRecord& record) {
  validate_keypoints(record.keypoints, bounds_);
  records_[record.keypoints.frame] = record;
}

void validate_keypoints(const KeypointSet& ks, ImageSize bounds) {
  for (int k = 0; k < kPartCount; ++k) {
    if (!ks.visible[k]) continue;
    const auto& p = ks.points[k];
    if (!p.allFinite() || p.x() < 0.0 || p.y() < 0.0 || p.x() >= bounds.width || p.y() >= bounds.height) {
      throw ValidationError(std::string(part_name(k)) + " out of bounds");
    }
  }
}

AnnotationStore put_annotation(AnnotationStore store, const KeypointSet& ks) {
  store.put(ks);
  return store;
}

double frame_sse(const data::PressureFrame& a, const data::PressureFrame& b) {
  return (a.values.cast<double>() - b.values.cast<double>()).squaredNorm();
}

AnnotationStore propagate(AnnotationStore store, const data::PressureSequence& seq) {
  const int subject = seq.meta.subject_id;
  const int posture = seq.meta.posture_id;

  std::vector<std::pair<const data::PressureFrame*, const AnnotationRecord*>> seeds;
  for (const auto& frame : seq.frames) {
    const auto* rec = store.find(FrameRef{subject, posture, frame.timestamp_index});
    if (rec != nullptr && rec->provenance.manual()) seeds.emplace_back(&frame, rec);
  }
  if (seeds.empty()) throw NoSeedAnnotationError("no manual annotation in sequence " + seq.id());

  std::vector<AnnotationRecord> batch;
  for (const auto& frame : seq.frames) {
    const FrameRef ref{subject, posture, frame.timestamp_index};
    const auto* existing = store.find(ref);
    if (existing != nullptr && existing->provenance.manual()) continue;
    double best = std::numeric_limits<double>::infinity();
    const AnnotationRecord* source = nullptr;
    // Seeds are in timestamp order, so strict < keeps the lower index on ties.
    for (const auto& [seed_frame, seed] : seeds) {
      const double sse = frame_sse(frame, *seed_frame);
      if (sse < best) {
        best = sse;
        source = seed;
      }
    }
    AnnotationRecord rec{source->keypoints, Provenance{source->keypoints.frame}};
    rec.keypoints.frame = ref;
    batch.push_back(std::move(rec));
  }
  for (const auto& rec : batch) store.put_record(rec);
  return store;
}

namespace {

nlohmann::json frame_json(const FrameRef& f) { return {f.subject_id, f.posture_id, f.timestamp_index}; }

FrameRef frame_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) throw ValidationError("frame: expected [subject, posture, t]");
  return FrameRef{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

}  // namespace

nlohmann::json record_to_json(const AnnotationRecord& record) {
  nlohmann::json points = nlohmann::json::object();
  nlohmann::json visible = nlohmann::json::object();
  for (int k = 0; k < kPartCount; ++k) {
    const std::string name(part_name(k));
    points[name] = {record.keypoints.points[k].x(), record.keypoints.points[k].y()};
    visible[name] = record.keypoints.visible[k];
  }
  nlohmann::json prov = record.provenance.manual()
                            ? nlohmann::json("manual")
                            : nlohmann::json{{"propagated", frame_json(*record.provenance.propagated_from)}};
  return {{"frame", frame_json(record.keypoints.frame)}, {"points", points}, {"visible", visible}, {"provenance", prov}};
}

AnnotationRecord record_from_json(const nlohmann::json& j) {
  AnnotationRecord rec;
  try {
    rec.keypoints.frame = frame_from_json(j.at("frame"));
    const auto& points = j.at("points");
    const auto& visible = j.value("visible", nlohmann::json::object());
    for (auto it = points.begin(); it != points.end(); ++it) {
      if (!part_from_name(it.key())) throw ValidationError("points: unknown part " + it.key());
    }
    for (int k = 0; k < kPartCount; ++k) {
      const std::string name(part_name(k));
      if (points.contains(name)) {
        const auto& p = points.at(name);
        if (!p.is_array() || p.size() != 2) throw ValidationError("points." + name + ": expected [x, y]");
        rec.keypoints.points[k] = Eigen::Vector2d(p[0].get<double>(), p[1].get<double>());
        rec.keypoints.visible[k] = visible.value(name, true);
      } else {
        rec.keypoints.visible[k] = false;
      }
    }
    if (j.contains("provenance")) {
      const auto& p = j.at("provenance");
      if (p.is_string()) {
        if (p.get<std::string>() != "manual") throw ValidationError("provenance: expected \"manual\"");
      } else {
        rec.provenance.propagated_from = frame_from_json(p.at("propagated"));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("annotation: ") + e.what());
  }
  return rec;
}

nlohmann::json to_json(const AnnotationStore& store) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [ref, rec] : store.records()) out.push_back(record_to_json(rec));
  return out;
}

AnnotationStore store_from_json(const nlohmann::json& j, ImageSize bounds) {
  AnnotationStore store(bounds);
  for (const auto& item : j) store.put_record(record_from_json(item));
  return store;
}

void save_annotations(const AnnotationStore& store, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IOError("cannot write " + path.string());
  out << to_json(store).dump(1) << '\n';
}

AnnotationStore load_annotations(const std::filesystem::path& path, ImageSize bounds) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open " + path.string());
  try {
    return store_from_json(nlohmann::json::parse(in), bounds);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace presspose::annotation
