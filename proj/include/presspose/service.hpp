#pragma once

// HTTP facade over a data directory: sequences, frame rasters, annotations,
// propagation and inference. Routing lives in Service::handle so it can be
// exercised without sockets; HttpServer binds it to a port.
//
//   GET  /sequences
//   GET  /sequences/{id}/frames/{t}/image?colormap=viridis
//   GET  /sequences/{id}/frames/{t}/annotation
//   POST /sequences/{id}/frames/{t}/annotation
//   GET  /sequences/{id}/annotations
//   POST /sequences/{id}/propagate
//   GET  /annotations
//   POST /annotations
//   POST /infer
//   GET  /skeleton

#include <nlohmann/json.hpp>

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "presspose/annotation.hpp"
#include "presspose/colormap.hpp"
#include "presspose/polishnet.hpp"
#include "presspose/pose_adapter.hpp"
#include "presspose/pressure.hpp"

namespace presspose::service {

struct ServiceConfig {
  std::filesystem::path data_dir;
  ImageSize working_size{};
  std::string default_colormap = "viridis";
  std::string adapter = "mock";
  std::optional<std::filesystem::path> checkpoint;
  double peak_threshold = 0.10;
  /// Save the store to data_dir/annotations.json after every write.
  bool persist = true;
};

struct Request {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;

  nlohmann::json json() const { return nlohmann::json::parse(body); }
};

class Service {
 public:
  explicit Service(ServiceConfig config);

  Response handle(const Request& request);

  /// Snapshot of the annotation store.
  annotation::AnnotationStore store() const;
  const std::vector<data::PressureSequence>& sequences() const { return sequences_; }

  /// Holds the writer slot of a sequence, as a write request would; for
  /// exercising conflict handling.
  class WriterSlot {
   public:
    WriterSlot(Service& s, const std::string& id);
    ~WriterSlot();
    bool acquired() const { return acquired_; }

   private:
    std::mutex* mutex_ = nullptr;
    bool acquired_ = false;
  };

 private:
  Response list_sequences() const;
  Response frame_image(const data::PressureSequence& seq, int t, const Request& req) const;
  Response get_annotation(const data::PressureSequence& seq, int t) const;
  Response post_annotation(const data::PressureSequence& seq, std::optional<int> t, const Request& req);
  Response sequence_annotations(const data::PressureSequence& seq) const;
  Response propagate(const data::PressureSequence& seq);
  Response infer(const Request& req) const;
  Response skeleton() const;

  const data::PressureSequence* find_sequence(const std::string& id) const;
  std::mutex& writer_mutex(const std::string& id);
  void commit(annotation::AnnotationStore next);

  ServiceConfig config_;
  std::vector<data::PressureSequence> sequences_;
  std::unique_ptr<pose::PoseAdapter<float>> adapter_;
  std::optional<polish::PolishNetParams<float>> polish_;

  mutable std::shared_mutex store_mutex_;
  annotation::AnnotationStore store_;

  std::mutex writers_guard_;
  std::map<std::string, std::unique_ptr<std::mutex>> writers_;
};

/// Blocking HTTP server around a Service.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();

  /// Binds to `host`; port 0 picks a free port. Returns the bound port.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace presspose::service
