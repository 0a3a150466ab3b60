#include <gtest/gtest.h>

#include <filesystem>

#include "oracles.hpp"
#include "presspose/annotation.hpp"
#include "presspose/errors.hpp"

using namespace presspose;
using namespace presspose::annotation;

namespace {

constexpr ImageSize kBounds{256, 128};

KeypointSet labeled(std::mt19937_64& rng, const FrameRef& ref) {
  auto ks = testkit::random_keypoints(rng, kBounds);
  ks.frame = ref;
  return ks;
}

}  // namespace

TEST(Annotation, PropagationMatchesOracle) {
  std::mt19937_64 rng(11);
  for (int fixture = 0; fixture < 8; ++fixture) {
    const auto seq = testkit::random_sequence(rng, 6, fixture % 2 == 0, 2, 3);
    std::vector<int> manual{fixture % 6, (fixture + 3) % 6};
    AnnotationStore store(kBounds);
    for (int t : manual) store.put(labeled(rng, {2, 3, t}));
    const auto out = propagate(store, seq);
    const auto want = testkit::propagation_oracle(seq, manual);
    ASSERT_EQ(out.size(), 6u);
    for (const auto& [t, source] : want) {
      const auto* rec = out.find({2, 3, t});
      ASSERT_NE(rec, nullptr);
      ASSERT_FALSE(rec->provenance.manual());
      EXPECT_EQ(rec->provenance.propagated_from->timestamp_index, source);
      EXPECT_EQ(rec->keypoints.points, store.find({2, 3, source})->keypoints.points);
      EXPECT_EQ(rec->keypoints.frame.timestamp_index, t);
    }
    for (int t : manual) EXPECT_EQ(*out.find({2, 3, t}), *store.find({2, 3, t}));
  }
}

TEST(Annotation, TiesGoToLowerTimestamp) {
  std::mt19937_64 rng(12);
  auto seq = testkit::random_sequence(rng, 4, true);
  seq.frames[3].values = seq.frames[1].values;  // frames 1 and 3 identical
  seq.frames[2].values = seq.frames[1].values;
  AnnotationStore store(kBounds);
  store.put(labeled(rng, {1, 1, 1}));
  store.put(labeled(rng, {1, 1, 3}));
  const auto out = propagate(store, seq);
  EXPECT_EQ(out.find({1, 1, 2})->provenance.propagated_from->timestamp_index, 1);
}

TEST(Annotation, PropagatedRecordsAreReplacedButManualKept) {
  std::mt19937_64 rng(13);
  const auto seq = testkit::random_sequence(rng, 3, true);
  AnnotationStore store(kBounds);
  store.put(labeled(rng, {1, 1, 0}));
  auto once = propagate(store, seq);
  once.put(labeled(rng, {1, 1, 2}));
  const auto twice = propagate(once, seq);
  EXPECT_TRUE(twice.find({1, 1, 2})->provenance.manual());
  EXPECT_EQ(twice, propagate(twice, seq));
}

TEST(Annotation, PropagationNeedsASeed) {
  std::mt19937_64 rng(14);
  const auto seq = testkit::random_sequence(rng, 3, true);
  EXPECT_THROW(propagate(AnnotationStore(kBounds), seq), NoSeedAnnotationError);
}

TEST(Annotation, JsonRoundTrip) {
  std::mt19937_64 rng(15);
  const auto seq = testkit::random_sequence(rng, 5, true, 4, 9);
  AnnotationStore store(kBounds);
  store.put(labeled(rng, {4, 9, 2}));
  store = propagate(store, seq);
  EXPECT_EQ(store_from_json(to_json(store), kBounds), store);
  const auto path = std::filesystem::temp_directory_path() / ("presspose_ann_" + std::to_string(::getpid()) + ".json");
  save_annotations(store, path);
  EXPECT_EQ(load_annotations(path, kBounds), store);
  std::filesystem::remove(path);
}

TEST(Annotation, RecordJsonSchema) {
  std::mt19937_64 rng(16);
  const auto ks = labeled(rng, {1, 2, 3});
  const auto j = record_to_json({ks, {}});
  EXPECT_EQ(j["frame"], nlohmann::json({1, 2, 3}));
  EXPECT_EQ(j["provenance"], "manual");
  EXPECT_EQ(j["points"].size(), static_cast<std::size_t>(kPartCount));
  EXPECT_EQ(record_from_json(j).keypoints, ks);
}

TEST(Annotation, ValidationNamesThePart) {
  KeypointSet ks;
  ks.visible.fill(true);
  ks.points[index_of(Part::kLKnee)] = Eigen::Vector2d(500, 10);
  try {
    validate_keypoints(ks, kBounds);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("l_knee"), std::string::npos);
  }
  ks.visible[index_of(Part::kLKnee)] = false;
  EXPECT_NO_THROW(validate_keypoints(ks, kBounds));
}

TEST(Annotation, MissingPartsAreInvisibleAndUnknownPartsRejected) {
  nlohmann::json j{{"frame", {1, 1, 0}}, {"points", {{"head", {3, 4}}}}};
  const auto rec = record_from_json(j);
  EXPECT_TRUE(rec.keypoints.visible[0]);
  EXPECT_FALSE(rec.keypoints.visible[1]);
  j["points"]["tail"] = {1, 1};
  EXPECT_THROW(record_from_json(j), ValidationError);
}

TEST(Annotation, FrameSse) {
  data::PressureFrame a;
  data::PressureFrame b;
  b.values(0, 0) = 3.0f;
  b.values(5, 5) = 4.0f;
  EXPECT_DOUBLE_EQ(frame_sse(a, b), 25.0);
}
