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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "hca/classify.hpp"
#include "hca/error.hpp"

namespace hca::classify {
namespace {

LabeledSet small_set() {
  return testing::labeled_from_tokens(
      {{"exam", "fail", "exam"}, {"pizza", "free"}, {"lab", "broken"}, {"exam", "lab"},
       {"free", "fun"}},
      {0, 1, 2, 0, 1}, 3);
}

class RoundTrip : public ::testing::TestWithParam<ClassifierKind> {};

TEST_P(RoundTrip, WriteReadWriteIsIdentical) {
  const LabeledSet set = small_set();
  const Model model = train(GetParam(), set, TrainConfig{}, 1.0);
  const std::string text = write_model(model);
  const Model back = read_model(text, "mem");
  EXPECT_EQ(write_model(back), text);
  EXPECT_EQ(model_kind(back), GetParam());
  EXPECT_EQ(model_classes(back), 3u);
  EXPECT_EQ(model_dim(back), set.dim);
  for (const auto& x : set.vectors) {
    const Prediction a = predict(model, x), b = predict(back, x);
    EXPECT_EQ(a.category, b.category);
    EXPECT_EQ(a.scores, b.scores);
  }
}

TEST_P(RoundTrip, TrainingIsBitDeterministic) {
  const LabeledSet set = small_set();
  EXPECT_EQ(write_model(train(GetParam(), set, TrainConfig{}, 1.0)),
            write_model(train(GetParam(), set, TrainConfig{}, 1.0)));
}

TEST_P(RoundTrip, PosteriorsSumToOne) {
  if (GetParam() == ClassifierKind::kSvm) GTEST_SKIP() << "margins";
  const LabeledSet set = small_set();
  const Model model = train(GetParam(), set, TrainConfig{}, 1.0);
  for (const auto& x : set.vectors) {
    double s = 0.0;
    for (double p : predict(model, x).scores) s += p;
    EXPECT_NEAR(s, 1.0, 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Kinds, RoundTrip,
                         ::testing::Values(ClassifierKind::kNaiveBayes,
                                           ClassifierKind::kMaxEnt, ClassifierKind::kSvm),
                         [](const auto& info) { return std::string(kind_name(info.param)); });

TEST(ModelIo, HeaderAndNegativeInfinity) {
  const Model model = train(ClassifierKind::kNaiveBayes, small_set(), TrainConfig{}, 0.0);
  const std::string text = write_model(model);
  EXPECT_EQ(text.rfind("hca-model nb 3 7\n", 0), 0u);
  EXPECT_NE(text.find("-inf"), std::string::npos);
  EXPECT_EQ(write_model(read_model(text, "mem")), text);
}

TEST(ModelIo, RejectsMalformedFiles) {
  EXPECT_THROW(read_model("", "mem"), ValidationError);
  EXPECT_THROW(read_model("hca-model knn 2 2\n", "mem"), ValidationError);
  EXPECT_THROW(read_model("hca-model svm 2 2\n1\t2\n", "mem"), ValidationError);
  EXPECT_THROW(read_model("hca-model maxent 1 1\ninf\n0\n", "mem"), ValidationError);
  const std::string good = write_model(train(ClassifierKind::kSvm, small_set(), TrainConfig{}, 1.0));
  EXPECT_THROW(read_model(good + "1\n", "mem"), ValidationError);
}

TEST(Kinds, NamesRoundTrip) {
  for (auto k : {ClassifierKind::kNaiveBayes, ClassifierKind::kMaxEnt, ClassifierKind::kSvm}) {
    EXPECT_EQ(parse_kind(kind_name(k)), k);
  }
  EXPECT_EQ(score_kind(ClassifierKind::kSvm), "margin");
  EXPECT_EQ(score_kind(ClassifierKind::kMaxEnt), "posterior");
  EXPECT_THROW(parse_kind("knn"), ValidationError);
}

TEST(TrainConfig, Validation) {
  TrainConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.epochs = 0;
  EXPECT_THROW(cfg.validate(), ValidationError);
  cfg = {};
  cfg.learning_rate = -1;
  EXPECT_THROW(cfg.validate(), ValidationError);
  cfg = {};
  cfg.tolerance = 0;
  EXPECT_THROW(cfg.validate(), ValidationError);
}

}  // namespace
}  // namespace hca::classify
