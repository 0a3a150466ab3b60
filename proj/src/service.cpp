#include "presspose/service.hpp"

#include <httplib.h>

#include <charconv>
#include <sstream>

#include "presspose/dataset.hpp"
#include "presspose/errors.hpp"
#include "presspose/evaluation.hpp"
#include "presspose/png.hpp"
#include "presspose/skeleton.hpp"

namespace presspose::service {

namespace {

Response json_response(int status, const nlohmann::json& body) { return {status, "application/json", body.dump()}; }

Response error_response(int status, const std::string& message, const std::string& field = "") {
  nlohmann::json body{{"error", message}};
  if (!field.empty()) body["field"] = field;
  return json_response(status, body);
}

// Leading identifier of a validation message ("head out of bounds" -> "head").
std::string field_of(const std::string& message) {
  const auto end = message.find_first_of(": ");
  return message.substr(0, end);
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::stringstream ss(path);
  std::string item;
  while (std::getline(ss, item, '/'))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

std::optional<int> parse_int(const std::string& s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

const data::PressureFrame* find_frame(const data::PressureSequence& seq, int t) {
  for (const auto& f : seq.frames)
    if (f.timestamp_index == t) return &f;
  return nullptr;
}

nlohmann::json keypoints_json(const KeypointSet& ks) {
  nlohmann::json points = nlohmann::json::object();
  nlohmann::json visible = nlohmann::json::object();
  for (int k = 0; k < kPartCount; ++k) {
    const std::string name(part_name(k));
    points[name] = {ks.points[k].x(), ks.points[k].y()};
    visible[name] = ks.visible[k];
  }
  return {{"points", points}, {"visible", visible}};
}

}  // namespace

Service::Service(ServiceConfig config) : config_(std::move(config)), store_(config_.working_size) {
  sequences_ = data::load_sequence_dir(config_.data_dir);
  const auto labels = config_.data_dir / data::kAnnotationFile;
  if (std::filesystem::exists(labels)) store_ = annotation::load_annotations(labels, config_.working_size);
  adapter_ = pose::load_adapter<float>(config_.adapter);
  if (config_.checkpoint) {
    polish_ = polish::load_checkpoint(*config_.checkpoint);
    if (!(polish_->config.working_size == config_.working_size)) {
      throw ConfigError("service: checkpoint working size does not match the configured working size");
    }
  }
  data::find_colormap(config_.default_colormap);
}

annotation::AnnotationStore Service::store() const {
  std::shared_lock lock(store_mutex_);
  return store_;
}

const data::PressureSequence* Service::find_sequence(const std::string& id) const {
  for (const auto& s : sequences_)
    if (s.id() == id) return &s;
  return nullptr;
}

std::mutex& Service::writer_mutex(const std::string& id) {
  std::lock_guard guard(writers_guard_);
  auto& slot = writers_[id];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

Service::WriterSlot::WriterSlot(Service& s, const std::string& id) : mutex_(&s.writer_mutex(id)) {
  acquired_ = mutex_->try_lock();
}

Service::WriterSlot::~WriterSlot() {
  if (acquired_) mutex_->unlock();
}

void Service::commit(annotation::AnnotationStore next) {
  if (config_.persist) annotation::save_annotations(next, config_.data_dir / data::kAnnotationFile);
  std::unique_lock lock(store_mutex_);
  store_ = std::move(next);
}

Response Service::handle(const Request& req) {
  try {
    const auto parts = split_path(req.path);
    const bool get = req.method == "GET";
    const bool post = req.method == "POST";
    if (parts.size() == 1 && parts[0] == "sequences" && get) return list_sequences();
    if (parts.size() == 1 && parts[0] == "skeleton" && get) return skeleton();
    if (parts.size() == 1 && parts[0] == "infer" && post) return infer(req);
    if (parts.size() == 1 && parts[0] == "annotations") {
      if (get) return json_response(200, annotation::to_json(store()));
      if (post) {
        nlohmann::json body;
        try {
          body = nlohmann::json::parse(req.body);
        } catch (const nlohmann::json::parse_error&) {
          return error_response(400, "body: invalid JSON", "body");
        }
        if (!body.is_object() || !body.contains("frame")) return error_response(400, "frame: required", "frame");
        const auto rec = annotation::record_from_json(body);
        const auto* seq = find_sequence(data::sequence_id(rec.keypoints.frame.subject_id, rec.keypoints.frame.posture_id));
        if (seq == nullptr) return error_response(404, "unknown sequence", "frame");
        return post_annotation(*seq, std::nullopt, req);
      }
    }
    if (parts.size() >= 2 && parts[0] == "sequences") {
      const auto* seq = find_sequence(parts[1]);
      if (seq == nullptr) return error_response(404, "unknown sequence " + parts[1]);
      if (parts.size() == 3 && parts[2] == "annotations" && get) return sequence_annotations(*seq);
      if (parts.size() == 3 && parts[2] == "propagate" && post) return propagate(*seq);
      if (parts.size() == 5 && parts[2] == "frames") {
        const auto t = parse_int(parts[3]);
        if (!t || find_frame(*seq, *t) == nullptr) return error_response(404, "unknown frame " + parts[3]);
        if (parts[4] == "image" && get) return frame_image(*seq, *t, req);
        if (parts[4] == "annotation" && get) return get_annotation(*seq, *t);
        if (parts[4] == "annotation" && post) return post_annotation(*seq, *t, req);
      }
    }
    return error_response(404, "no route for " + req.method + " " + req.path);
  } catch (const ValidationError& e) {
    return error_response(400, e.what(), field_of(e.what()));
  } catch (const NoSeedAnnotationError& e) {
    return error_response(400, e.what(), "annotations");
  } catch (const UnknownColormapError& e) {
    return error_response(400, e.what(), "colormap");
  } catch (const ParseError& e) {
    return error_response(400, e.what(), field_of(e.what()));
  } catch (const std::exception& e) {
    return error_response(500, e.what());
  }
}

Response Service::list_sequences() const {
  const auto snapshot = store();
  nlohmann::json list = nlohmann::json::array();
  for (const auto& s : sequences_) {
    std::size_t manual = 0;
    std::size_t propagated = 0;
    std::vector<int> timestamps;
    for (const auto& f : s.frames) {
      timestamps.push_back(f.timestamp_index);
      if (const auto* rec = snapshot.find({s.meta.subject_id, s.meta.posture_id, f.timestamp_index})) {
        (rec->provenance.manual() ? manual : propagated)++;
      }
    }
    list.push_back({{"id", s.id()},
                    {"subject_id", s.meta.subject_id},
                    {"posture_id", s.meta.posture_id},
                    {"sample_rate_hz", s.meta.sample_rate_hz},
                    {"frames", s.frames.size()},
                    {"timestamps", timestamps},
                    {"manual", manual},
                    {"propagated", propagated}});
  }
  return json_response(200, list);
}

Response Service::frame_image(const data::PressureSequence& seq, int t, const Request& req) const {
  const auto it = req.query.find("colormap");
  const std::string name = it == req.query.end() ? config_.default_colormap : it->second;
  const auto& map = data::find_colormap(name);
  const auto png = io::encode_png(data::colorize(*find_frame(seq, t), map, config_.working_size));
  return {200, "image/png", std::string(png.begin(), png.end())};
}

Response Service::get_annotation(const data::PressureSequence& seq, int t) const {
  const auto snapshot = store();
  const auto* rec = snapshot.find({seq.meta.subject_id, seq.meta.posture_id, t});
  if (rec == nullptr) return error_response(404, "frame has no annotation");
  return json_response(200, annotation::record_to_json(*rec));
}

Response Service::sequence_annotations(const data::PressureSequence& seq) const {
  const auto snapshot = store();
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [ref, rec] : snapshot.records())
    if (ref.subject_id == seq.meta.subject_id && ref.posture_id == seq.meta.posture_id)
      list.push_back(annotation::record_to_json(rec));
  return json_response(200, list);
}

Response Service::post_annotation(const data::PressureSequence& seq, std::optional<int> t, const Request& req) {
  nlohmann::json body;
  try {
    body = nlohmann::json::parse(req.body);
  } catch (const nlohmann::json::parse_error&) {
    return error_response(400, "body: invalid JSON", "body");
  }
  if (!body.is_object()) return error_response(400, "body: expected an object", "body");
  const FrameRef url_ref{seq.meta.subject_id, seq.meta.posture_id, t.value_or(0)};
  if (t) {
    if (!body.contains("frame")) {
      body["frame"] = {url_ref.subject_id, url_ref.posture_id, url_ref.timestamp_index};
    }
  }
  auto rec = annotation::record_from_json(body);
  if (t && rec.keypoints.frame != url_ref) return error_response(400, "frame: does not match the request path", "frame");
  if (find_frame(seq, rec.keypoints.frame.timestamp_index) == nullptr) return error_response(404, "unknown frame");
  if (body.contains("provenance") && !rec.provenance.manual()) {
    return error_response(400, "provenance: only manual records can be posted", "provenance");
  }
  annotation::validate_keypoints(rec.keypoints, config_.working_size);

  WriterSlot slot(*this, seq.id());
  if (!slot.acquired()) return error_response(409, "sequence " + seq.id() + " has a write in progress");
  auto next = store();
  next.put(rec.keypoints);
  commit(std::move(next));
  return json_response(200, annotation::record_to_json({rec.keypoints, {}}));
}

Response Service::propagate(const data::PressureSequence& seq) {
  WriterSlot slot(*this, seq.id());
  if (!slot.acquired()) return error_response(409, "sequence " + seq.id() + " has a write in progress");
  const auto before = store();
  auto next = annotation::propagate(before, seq);
  std::size_t added = 0;
  for (const auto& [ref, rec] : next.records()) {
    const auto* old = before.find(ref);
    if (!rec.provenance.manual() && (old == nullptr || !(*old == rec))) ++added;
  }
  commit(next);
  nlohmann::json records = nlohmann::json::array();
  for (const auto& [ref, rec] : next.records())
    if (ref.subject_id == seq.meta.subject_id && ref.posture_id == seq.meta.posture_id)
      records.push_back(annotation::record_to_json(rec));
  return json_response(200, {{"sequence", seq.id()}, {"updated", added}, {"records", records}});
}

Response Service::infer(const Request& req) const {
  nlohmann::json body;
  try {
    body = nlohmann::json::parse(req.body);
  } catch (const nlohmann::json::parse_error&) {
    return error_response(400, "body: invalid JSON", "body");
  }
  data::PressureFrame frame;
  std::optional<FrameRef> ref;
  if (body.contains("frame")) {
    const auto& f = body["frame"];
    if (!f.is_array() || f.size() != 3 || !f[0].is_number_integer() || !f[1].is_number_integer() ||
        !f[2].is_number_integer()) {
      return error_response(400, "frame: expected [subject, posture, t]", "frame");
    }
    ref = FrameRef{f[0].get<int>(), f[1].get<int>(), f[2].get<int>()};
    const auto* seq = find_sequence(data::sequence_id(ref->subject_id, ref->posture_id));
    if (seq == nullptr) return error_response(404, "unknown sequence", "frame");
    const auto* found = find_frame(*seq, ref->timestamp_index);
    if (found == nullptr) return error_response(404, "unknown frame", "frame");
    frame = *found;
  } else if (body.contains("values")) {
    const auto& v = body["values"];
    if (!v.is_array() || v.size() != static_cast<std::size_t>(data::kSensorCount)) {
      return error_response(400, "values: expected 2048 numbers", "values");
    }
    for (int i = 0; i < data::kSensorCount; ++i) {
      if (!v[i].is_number()) return error_response(400, "values: expected 2048 numbers", "values");
      frame.values.data()[i] = std::clamp(v[i].get<float>(), 0.0f, data::kMaxPressure);
    }
  } else {
    return error_response(400, "body: expected \"frame\" or \"values\"", "frame");
  }
  const std::string cmap = body.value("colormap", config_.default_colormap);
  const auto image = data::colorize(frame, data::find_colormap(cmap), config_.working_size);
  eval::PolishFn stage;
  if (polish_) stage = eval::polish_stage(*polish_);
  const auto decoded = eval::predict(*adapter_, image, stage, config_.peak_threshold);
  nlohmann::json out = keypoints_json(decoded.keypoints);
  nlohmann::json confidence = nlohmann::json::object();
  for (int k = 0; k < kPartCount; ++k) confidence[std::string(part_name(k))] = decoded.confidence[k];
  out["confidence"] = confidence;
  out["adapter"] = adapter_->name();
  out["polished"] = polish_.has_value();
  if (ref) out["frame"] = {ref->subject_id, ref->posture_id, ref->timestamp_index};
  return json_response(200, out);
}

Response Service::skeleton() const {
  const auto& topo = SkeletonTopology::standard();
  nlohmann::json parts = nlohmann::json::array();
  for (auto p : topo.parts) parts.push_back(std::string(p));
  nlohmann::json limbs = nlohmann::json::array();
  for (const auto& [a, b] : topo.limbs) limbs.push_back({std::string(part_name(a)), std::string(part_name(b))});
  return json_response(200, {{"parts", parts},
                             {"limbs", limbs},
                             {"working_size", {config_.working_size.height, config_.working_size.width}}});
}

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>()) {
  auto route = [&service](const httplib::Request& in, httplib::Response& out) {
    Request req{in.method, in.path, {}, in.body};
    for (const auto& [k, v] : in.params) req.query[k] = v;
    const Response r = service.handle(req);
    out.status = r.status;
    out.set_content(r.body, r.content_type);
  };
  impl_->server.Get(".*", route);
  impl_->server.Post(".*", route);
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw IOError("cannot bind " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) throw IOError("cannot bind " + host + ":" + std::to_string(port));
  return port;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace presspose::service
