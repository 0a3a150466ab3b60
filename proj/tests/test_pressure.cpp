#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "presspose/dataset.hpp"
#include "presspose/errors.hpp"
#include "presspose/pressure.hpp"

namespace fs = std::filesystem;
using namespace presspose;
using namespace presspose::data;

namespace {

fs::path temp_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("presspose_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

bool same_sequence(const PressureSequence& a, const PressureSequence& b) {
  if (a.size() != b.size() || a.meta.subject_id != b.meta.subject_id || a.meta.posture_id != b.meta.posture_id ||
      a.meta.sample_rate_hz != b.meta.sample_rate_hz)
    return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.frames[i].timestamp_index != b.frames[i].timestamp_index) return false;
    if (a.frames[i].values != b.frames[i].values) return false;
  }
  return true;
}

}  // namespace

TEST(Pressure, TextRoundTripIsIdentity) {
  std::mt19937_64 rng(1);
  const auto dir = temp_dir("text");
  for (int i = 0; i < 5; ++i) {
    auto seq = testkit::random_sequence(rng, 1 + i, false, 2 + i, 3);
    seq.meta.sample_rate_hz = 0.5 + i;
    save_sequence(seq, dir / "s.txt", FileFormat::kText);
    EXPECT_TRUE(same_sequence(seq, load_sequence(dir / "s.txt")));
  }
}

TEST(Pressure, BinaryRoundTripIsIdentity) {
  std::mt19937_64 rng(2);
  const auto dir = temp_dir("bin");
  for (int i = 0; i < 5; ++i) {
    const auto seq = testkit::random_sequence(rng, 1 + i, false, 4, 5 + i);
    save_sequence(seq, dir / "s.pmat", FileFormat::kBinary);
    EXPECT_TRUE(same_sequence(seq, load_sequence(dir / "s.pmat")));
  }
}

TEST(Pressure, BinaryLayoutHasMagicAndDimensions) {
  std::mt19937_64 rng(3);
  const auto seq = testkit::random_sequence(rng, 2, true);
  const auto bytes = encode_binary(seq);
  ASSERT_EQ(bytes.size(), 5u + 12u + 2u * 2048u * 4u);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 5), "PMAT1");
  EXPECT_EQ(bytes[5], 2);
  EXPECT_EQ(bytes[9], 32);
  EXPECT_EQ(bytes[13], 64);
}

TEST(Pressure, TextParsingClampsAndRejects) {
  std::string line;
  for (int i = 0; i < kSensorCount; ++i) line += (i == 0 ? "150" : i == 1 ? ",-3" : " 7");
  std::istringstream in(line + "\n");
  const auto seq = parse_text_frames(in, {});
  ASSERT_EQ(seq.size(), 1u);
  EXPECT_EQ(seq.frames[0].values(0, 0), 100.0f);
  EXPECT_EQ(seq.frames[0].values(0, 1), 0.0f);
  EXPECT_EQ(seq.frames[0].values(63, 31), 7.0f);

  std::istringstream short_line("1 2 3\n");
  EXPECT_THROW(parse_text_frames(short_line, {}), ParseError);
  std::istringstream bad("abc\n");
  EXPECT_THROW(parse_text_frames(bad, {}), ParseError);
}

TEST(Pressure, BinaryRejectsCorruption) {
  std::mt19937_64 rng(4);
  auto bytes = encode_binary(testkit::random_sequence(rng, 1, true));
  auto truncated = bytes;
  truncated.resize(truncated.size() - 4);
  EXPECT_THROW(decode_binary(truncated, {}), ParseError);
  bytes[0] = 'X';
  EXPECT_THROW(decode_binary(bytes, {}), ParseError);
}

TEST(Pressure, MedianFilterMatchesOracle) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 6; ++i) {
    const auto seq = testkit::random_sequence(rng, 1 + i % 4, i % 2 == 0);
    const auto got = median_filter_3d(seq);
    const auto want = testkit::median_oracle(seq);
    ASSERT_TRUE(same_sequence(got, want)) << "fixture " << i;
  }
}

TEST(Pressure, MedianFilterKeepsConstantSequences) {
  PressureSequence seq;
  for (int t = 0; t < 3; ++t) {
    PressureFrame f;
    f.values.setConstant(42.0f);
    f.timestamp_index = t;
    seq.frames.push_back(f);
  }
  EXPECT_TRUE(same_sequence(median_filter_3d(seq), seq));
  EXPECT_THROW(median_filter_3d(PressureSequence{}), EmptySequenceError);
}

TEST(Pressure, TrimDropsBothEnds) {
  std::mt19937_64 rng(6);
  const auto seq = testkit::random_sequence(rng, 10, true);
  const auto trimmed = trim_transitions(seq, 3);
  ASSERT_EQ(trimmed.size(), 4u);
  EXPECT_EQ(trimmed.frames.front().timestamp_index, 3);
  EXPECT_EQ(trimmed.frames.back().timestamp_index, 6);
  EXPECT_TRUE(same_sequence(trim_transitions(trimmed, 0), trimmed));
  EXPECT_THROW(trim_transitions(seq, 5), SequenceTooShortError);
}

TEST(Pressure, ValidateRejectsBadMetadata) {
  std::mt19937_64 rng(7);
  auto seq = testkit::random_sequence(rng, 2, true);
  seq.meta.subject_id = 14;
  EXPECT_THROW(seq.validate(), ValidationError);
  seq.meta.subject_id = 1;
  seq.frames[1].timestamp_index = 0;
  EXPECT_THROW(seq.validate(), ValidationError);
}

TEST(Dataset, LoadsDirectorySortedAndRejectsDuplicates) {
  std::mt19937_64 rng(8);
  const auto dir = temp_dir("dir");
  save_sequence(testkit::random_sequence(rng, 1, true, 3, 1), dir / "b.txt", FileFormat::kText);
  save_sequence(testkit::random_sequence(rng, 1, true, 1, 2), dir / "a.pmat", FileFormat::kBinary);
  save_sequence(testkit::random_sequence(rng, 1, true, 1, 1), dir / "c.txt", FileFormat::kText);
  const auto seqs = load_sequence_dir(dir);
  ASSERT_EQ(seqs.size(), 3u);
  EXPECT_EQ(seqs[0].id(), "1_1");
  EXPECT_EQ(seqs[1].id(), "1_2");
  EXPECT_EQ(seqs[2].id(), "3_1");
  save_sequence(testkit::random_sequence(rng, 1, true, 1, 1), dir / "d.txt", FileFormat::kText);
  EXPECT_THROW(load_sequence_dir(dir), ValidationError);
  EXPECT_THROW(load_sequence_dir(dir / "missing"), IOError);
}

TEST(Dataset, FilterSubjects) {
  std::vector<Sample> samples(4);
  for (int i = 0; i < 4; ++i) samples[i].frame.subject_id = i + 1;
  EXPECT_EQ(filter_subjects(samples, {2, 4}).size(), 2u);
  const auto rest = filter_subjects(samples, {2, 4}, true);
  ASSERT_EQ(rest.size(), 2u);
  EXPECT_EQ(rest[0].frame.subject_id, 1);
  EXPECT_EQ(rest[1].frame.subject_id, 3);
}
