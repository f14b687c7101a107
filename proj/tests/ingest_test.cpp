// Copyright 2026 The HCA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hca/ingest.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hca/error.hpp"
#include "hca/text.hpp"
#include "planted.hpp"

namespace hca::ingest {
namespace {

Dataset numbered(std::size_t n) {
  Dataset ds;
  for (std::size_t i = 0; i < n; ++i) {
    ds.records.push_back({std::to_string(i), "text " + std::to_string(i), {}, {}});
  }
  return ds;
}

TEST(ReadDataset, HashtagsParsedFromTextWhenFieldEmpty) {
  const Dataset ds = parse_jsonl(
      R"({"id":"1","text":"RT @a #EngineeringProblems exams","hashtags":[]})" "\n",
      "mem");
  ASSERT_EQ(ds.records.size(), 1u);
  EXPECT_EQ(ds.records[0].hashtags, std::vector<std::string>{"engineeringproblems"});
  EXPECT_EQ(ds.records[0].text, "RT @a #EngineeringProblems exams");
  EXPECT_FALSE(ds.records[0].label.has_value());
}

TEST(ReadDataset, ExplicitHashtagsAreLowercasedAndKept) {
  const Dataset ds = parse_jsonl(
      R"({"id":"1","text":"no tags","hashtags":["Food"],"label":"x"})", "mem");
  EXPECT_EQ(ds.records[0].hashtags, std::vector<std::string>{"food"});
  EXPECT_EQ(ds.records[0].label, "x");
}

TEST(ReadDataset, EmptyFileGivesEmptyDataset) {
  const auto dir = testing::scratch_dir("ingest-empty");
  text::write_file(dir / "e.jsonl", "");
  EXPECT_TRUE(read_dataset(dir / "e.jsonl", Format::kJsonl).records.empty());
}

TEST(ReadDataset, DuplicateIdRejected) {
  EXPECT_THROW(parse_jsonl("{\"id\":\"7\",\"text\":\"a\"}\n{\"id\":\"7\",\"text\":\"b\"}\n",
                           "mem"),
               ValidationError);
}

TEST(ReadDataset, BadLineReportsLineNumber) {
  try {
    parse_jsonl("{\"id\":\"1\",\"text\":\"a\"}\n{not json\n", "mem");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ReadDataset, TextOver280CodePointsRejected) {
  std::string body;
  for (int i = 0; i < 281; ++i) body += "\xc3\xa9";
  EXPECT_THROW(parse_jsonl("{\"id\":\"1\",\"text\":\"" + body + "\"}", "mem"),
               ValidationError);
  body.resize(280 * 2);
  EXPECT_NO_THROW(parse_jsonl("{\"id\":\"1\",\"text\":\"" + body + "\"}", "mem"));
}

TEST(ReadDataset, MissingFileIsIoError) {
  EXPECT_THROW(read_dataset("/nonexistent/x.jsonl", Format::kJsonl), IoError);
}

TEST(ReadDataset, CsvWithQuotesAndOptionalColumns) {
  const Dataset ds = parse_csv(
      "id,text,hashtags,label\n"
      "1,\"exams, again \"\"hard\"\"\",EngineeringProblems;x,exam-stress\n"
      "2,plain #EngineeringPerks,,\n",
      "mem");
  ASSERT_EQ(ds.records.size(), 2u);
  EXPECT_EQ(ds.records[0].text, "exams, again \"hard\"");
  EXPECT_EQ(ds.records[0].hashtags, (std::vector<std::string>{"engineeringproblems", "x"}));
  EXPECT_EQ(ds.records[0].label, "exam-stress");
  EXPECT_EQ(ds.records[1].hashtags, std::vector<std::string>{"engineeringperks"});
  EXPECT_FALSE(ds.records[1].label.has_value());
  EXPECT_THROW(parse_csv("text\nx\n", "mem"), ValidationError);
}

TEST(ReadDataset, PureFunctionOfBytes) {
  const std::string bytes = text::read_file(testing::shipped_data_dir() / "sample_tweets.jsonl");
  const Dataset a = parse_jsonl(bytes, "a"), b = parse_jsonl(bytes, "b");
  EXPECT_EQ(a.records, b.records);
  EXPECT_EQ(parse_jsonl(to_jsonl(a), "c").records, a.records);
}

TEST(Hashtags, MaximalRunsLowercasedDeduplicated) {
  EXPECT_EQ(extract_hashtags("#A_b1! x#y #a_B1 # #"),
            (std::vector<std::string>{"a_b1", "y"}));
}

TEST(Filter, KeepsIntersectingRecords) {
  Dataset ds;
  ds.records = {{"1", "a", {"engineeringproblems"}, {}}, {"2", "b", {"food"}, {}}};
  const Dataset out = filter_by_hashtags(ds, {"engineeringproblems", "engineeringperks"});
  ASSERT_EQ(out.records.size(), 1u);
  EXPECT_EQ(out.records[0].id, "1");
  EXPECT_THROW(filter_by_hashtags(ds, {}), ValidationError);
}

TEST(Filter, UnionOfWantedSetsIsUnionOfResults) {
  Dataset ds;
  ds.records = {{"1", "a", {"p"}, {}}, {"2", "b", {"q"}, {}}, {"3", "c", {"p", "q"}, {}},
                {"4", "d", {"r"}, {}}};
  std::set<std::string> ids;
  for (const auto& r : filter_by_hashtags(ds, {"p"}).records) ids.insert(r.id);
  for (const auto& r : filter_by_hashtags(ds, {"q"}).records) ids.insert(r.id);
  std::set<std::string> both;
  for (const auto& r : filter_by_hashtags(ds, {"p", "q"}).records) both.insert(r.id);
  EXPECT_EQ(ids, both);
}

TEST(Split, SizesPartitionAndDeterminism) {
  const Dataset ds = numbered(10);
  const auto [train, test] = split(ds, 0.2, 42);
  EXPECT_EQ(train.records.size(), 8u);
  EXPECT_EQ(test.records.size(), 2u);
  std::set<std::string> seen;
  for (const auto& r : train.records) seen.insert(r.id);
  for (const auto& r : test.records) EXPECT_TRUE(seen.insert(r.id).second);
  EXPECT_EQ(seen.size(), 10u);

  const auto [train2, test2] = split(ds, 0.2, 42);
  EXPECT_EQ(train2.records, train.records);
  EXPECT_EQ(test2.records, test.records);
}

TEST(Split, RejectsDegenerateInput) {
  EXPECT_THROW(split(numbered(1), 0.2, 1), ValidationError);
  EXPECT_THROW(split(numbered(5), 0.0, 1), ValidationError);
  EXPECT_THROW(split(numbered(5), 1.0, 1), ValidationError);
}

TEST(Split, ShuffleIsAPermutation) {
  for (std::size_t n : {2u, 17u, 100u}) {
    auto idx = shuffled_indices(n, n * 3);
    std::sort(idx.begin(), idx.end());
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(idx[i], i);
  }
}

// Expected permutation computed with a separate mt19937_64 implementation and
// the same rejection-sampled Fisher-Yates, then frozen.
TEST(Split, ShuffleIsStableAcrossBuilds) {
  EXPECT_EQ(shuffled_indices(10, 42),
            (std::vector<std::size_t>{1, 7, 9, 0, 3, 8, 4, 2, 5, 6}));
  EXPECT_NE(shuffled_indices(10, 42), shuffled_indices(10, 43));
}

}  // namespace
}  // namespace hca::ingest
