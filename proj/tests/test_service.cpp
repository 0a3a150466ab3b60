#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <thread>

#include "presspose/dataset.hpp"
#include "presspose/png.hpp"
#include "presspose/service.hpp"
#include "presspose/synthetic.hpp"

// after Eigen: resolv.h, pulled in here, defines _res
#include <httplib.h>

using namespace presspose;
using namespace presspose::service;
using nlohmann::json;

namespace {

constexpr ImageSize kWorking{64, 32};

class ServiceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = std::filesystem::temp_directory_path() /
          ("presspose_service_" + std::to_string(::getpid()) + "_" +
           ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    data::SyntheticOptions opt;
    opt.frames = 4;
    opt.working = kWorking;
    for (int subject : {1, 2}) {
      auto synth = data::make_synthetic_sequence(subject, 1, opt);
      data::save_sequence(synth.sequence, dir / (synth.sequence.id() + ".txt"), data::FileFormat::kText);
      labels.push_back(synth.keypoints);
    }
    ServiceConfig cfg;
    cfg.data_dir = dir;
    cfg.working_size = kWorking;
    svc = std::make_unique<Service>(cfg);
  }
  void TearDown() override {
    svc.reset();
    std::filesystem::remove_all(dir);
  }

  Response get(const std::string& path, std::map<std::string, std::string> query = {}) {
    return svc->handle({"GET", path, std::move(query), ""});
  }
  Response post(const std::string& path, const json& body) { return svc->handle({"POST", path, {}, body.dump()}); }

  /// Label body without a frame, as the annotator posts it.
  json label_body(int subject, int t) const {
    json points = json::object();
    const auto& ks = labels[subject - 1][t];
    for (int k = 0; k < kPartCount; ++k) points[std::string(part_name(k))] = {ks.points[k].x(), ks.points[k].y()};
    return {{"points", points}};
  }

  std::filesystem::path dir;
  std::vector<std::vector<KeypointSet>> labels;
  std::unique_ptr<Service> svc;
};

}  // namespace

TEST_F(ServiceTest, ListsSequences) {
  const auto r = get("/sequences");
  ASSERT_EQ(r.status, 200);
  const auto j = r.json();
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["id"], "1_1");
  EXPECT_EQ(j[1]["id"], "2_1");
  EXPECT_EQ(j[0]["frames"], 4);
  EXPECT_EQ(j[0]["manual"], 0);
}

TEST_F(ServiceTest, FrameImageIsPng) {
  const auto r = get("/sequences/1_1/frames/2/image", {{"colormap", "jet"}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.content_type, "image/png");
  const auto img = io::decode_png(std::vector<std::uint8_t>(r.body.begin(), r.body.end()));
  EXPECT_EQ(img.height, 64);
  EXPECT_EQ(img.width, 32);
  const auto bad = get("/sequences/1_1/frames/2/image", {{"colormap", "nope"}});
  EXPECT_EQ(bad.status, 400);
  EXPECT_EQ(bad.json()["field"], "colormap");
}

TEST_F(ServiceTest, PostThenGetAnnotationAndPersist) {
  const auto r = post("/sequences/1_1/frames/0/annotation", label_body(1, 0));
  ASSERT_EQ(r.status, 200) << r.body;
  const auto g = get("/sequences/1_1/frames/0/annotation");
  ASSERT_EQ(g.status, 200);
  const auto j = g.json();
  EXPECT_EQ(j["provenance"], "manual");
  EXPECT_EQ(j["frame"], json({1, 1, 0}));
  EXPECT_DOUBLE_EQ(j["points"]["head"][0].get<double>(), labels[0][0].points[0].x());

  ASSERT_TRUE(std::filesystem::exists(dir / data::kAnnotationFile));
  EXPECT_EQ(annotation::load_annotations(dir / data::kAnnotationFile, kWorking), svc->store());
  ServiceConfig cfg;
  cfg.data_dir = dir;
  cfg.working_size = kWorking;
  Service reopened(cfg);
  EXPECT_EQ(reopened.store(), svc->store());
  EXPECT_EQ(get("/sequences").json()[0]["manual"], 1);
  EXPECT_EQ(get("/sequences/1_1/annotations").json().size(), 1u);
  EXPECT_EQ(get("/annotations").json().size(), 1u);
}

TEST_F(ServiceTest, InvalidAnnotationsNameTheField) {
  auto body = label_body(1, 1);
  body["points"]["l_knee"] = {500.0, 3.0};
  auto r = post("/sequences/1_1/frames/1/annotation", body);
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.json()["field"], "l_knee");

  body = label_body(1, 1);
  body["points"]["tail"] = {1.0, 1.0};
  r = post("/sequences/1_1/frames/1/annotation", body);
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.json()["field"], "points");

  body = label_body(1, 1);
  body["frame"] = {1, 1, 2};
  r = post("/sequences/1_1/frames/1/annotation", body);
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.json()["field"], "frame");

  body = label_body(1, 1);
  body["provenance"] = {{"propagated", {1, 1, 0}}};
  r = post("/sequences/1_1/frames/1/annotation", body);
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.json()["field"], "provenance");

  r = svc->handle({"POST", "/sequences/1_1/frames/1/annotation", {}, "{not json"});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(svc->store().size(), 0u);
}

TEST_F(ServiceTest, UnknownResourcesAre404) {
  EXPECT_EQ(get("/sequences/9_9/annotations").status, 404);
  EXPECT_EQ(get("/sequences/1_1/frames/99/annotation").status, 404);
  EXPECT_EQ(get("/sequences/1_1/frames/x/image").status, 404);
  EXPECT_EQ(get("/sequences/1_1/frames/0/annotation").status, 404);  // no label yet
  EXPECT_EQ(get("/nothing").status, 404);
  EXPECT_EQ(svc->handle({"DELETE", "/sequences", {}, ""}).status, 404);
}

TEST_F(ServiceTest, ConcurrentWriteConflicts) {
  {
    Service::WriterSlot held(*svc, "1_1");
    ASSERT_TRUE(held.acquired());
    EXPECT_EQ(post("/sequences/1_1/frames/0/annotation", label_body(1, 0)).status, 409);
    EXPECT_EQ(post("/sequences/1_1/propagate", json::object()).status, 409);
    // other sequences are unaffected
    EXPECT_EQ(post("/sequences/2_1/frames/0/annotation", label_body(2, 0)).status, 200);
  }
  EXPECT_EQ(post("/sequences/1_1/frames/0/annotation", label_body(1, 0)).status, 200);
}

TEST_F(ServiceTest, Propagate) {
  auto r = post("/sequences/1_1/propagate", json::object());
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.json()["field"], "annotations");
  ASSERT_EQ(post("/sequences/1_1/frames/0/annotation", label_body(1, 0)).status, 200);
  r = post("/sequences/1_1/propagate", json::object());
  ASSERT_EQ(r.status, 200) << r.body;
  const auto j = r.json();
  EXPECT_EQ(j["sequence"], "1_1");
  EXPECT_EQ(j["updated"], 3);
  EXPECT_EQ(j["records"].size(), 4u);
  EXPECT_EQ(post("/sequences/1_1/propagate", json::object()).json()["updated"], 0);
  EXPECT_EQ(get("/sequences/1_1/frames/3/annotation").json()["provenance"]["propagated"], json({1, 1, 0}));
}

TEST_F(ServiceTest, PostToCollectionUsesBodyFrame) {
  auto body = label_body(2, 3);
  body["frame"] = {2, 1, 3};
  EXPECT_EQ(post("/annotations", body).status, 200);
  EXPECT_NE(svc->store().find({2, 1, 3}), nullptr);
  body["frame"] = {7, 1, 3};
  EXPECT_EQ(post("/annotations", body).status, 404);
  EXPECT_EQ(post("/annotations", label_body(2, 3)).status, 400);
}

TEST_F(ServiceTest, Infer) {
  auto r = post("/infer", {{"frame", {1, 1, 2}}});
  ASSERT_EQ(r.status, 200) << r.body;
  auto j = r.json();
  EXPECT_EQ(j["points"].size(), static_cast<std::size_t>(kPartCount));
  EXPECT_EQ(j["adapter"], "mock-0");
  EXPECT_EQ(j["polished"], false);
  EXPECT_EQ(j["frame"], json({1, 1, 2}));

  std::vector<double> values(data::kSensorCount, 150.0);
  r = post("/infer", {{"values", values}, {"colormap", "bone"}});
  EXPECT_EQ(r.status, 200) << r.body;
  values.pop_back();
  r = post("/infer", {{"values", values}});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.json()["field"], "values");
  EXPECT_EQ(post("/infer", {{"frame", {1, 1, 42}}}).status, 404);
  EXPECT_EQ(post("/infer", json::object()).status, 400);
}

TEST_F(ServiceTest, Skeleton) {
  const auto j = get("/skeleton").json();
  EXPECT_EQ(j["parts"].size(), static_cast<std::size_t>(kPartCount));
  EXPECT_EQ(j["limbs"].size(), static_cast<std::size_t>(kLimbCount));
  EXPECT_EQ(j["working_size"], json({64, 32}));
  EXPECT_EQ(j["limbs"][0], json({"head", "neck"}));
}

TEST_F(ServiceTest, ServesOverHttp) {
  HttpServer server(*svc);
  const int port = server.bind("127.0.0.1", 0);
  ASSERT_GT(port, 0);
  std::thread loop([&] { server.listen(); });
  httplib::Client client("127.0.0.1", port);
  const auto res = client.Get("/skeleton");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body)["parts"][0], "head");
  const auto posted = client.Post("/sequences/1_1/frames/0/annotation", label_body(1, 0).dump(), "application/json");
  ASSERT_TRUE(posted);
  EXPECT_EQ(posted->status, 200);
  const auto missing = client.Get("/sequences/5_5/annotations");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
  server.stop();
  loop.join();
  EXPECT_EQ(svc->store().size(), 1u);
}
