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

#include "hca/pipeline.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>

#include "hca/error.hpp"
#include "hca/text.hpp"
#include "planted.hpp"

namespace hca::pipeline {
namespace {

testing::PlantedCorpus small_planted(const std::string& name) {
  testing::PlantedOptions opt;
  opt.tweets_per_category = 20;
  return testing::write_planted_corpus(testing::scratch_dir(name), opt);
}

std::vector<Json> jsonl(const fs::path& p) {
  std::vector<Json> out;
  for (const auto& line : text::split(text::read_file(p), '\n')) {
    if (!line.empty()) out.push_back(Json::parse(line));
  }
  return out;
}

int cli(const std::string& args) {
  const int status =
      std::system(("'" + std::string(HCA_CLI_PATH) + "' " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Run, PlantedCorpusCountsAndAccuracy) {
  const auto pc = small_planted("pipe-run");
  const RunReport r = run(pc.config);
  EXPECT_EQ(r.counts.ingested, 120u);
  EXPECT_LE(r.counts.filtered, r.counts.ingested);
  EXPECT_EQ(r.counts.normalized, r.counts.filtered);
  EXPECT_EQ(r.counts.weak_labeled + r.counts.unlabeled, r.counts.normalized);
  EXPECT_EQ(r.counts.trained + r.counts.held_out, r.counts.weak_labeled);
  EXPECT_EQ(r.counts.classified, r.counts.normalized);
  EXPECT_EQ(r.conflicts, pc.conflict_words.size());
  ASSERT_TRUE(r.vs_gold.has_value());
  EXPECT_GE(r.vs_gold->accuracy, 0.9);
  ASSERT_TRUE(r.vs_weak.has_value());
  EXPECT_EQ(r.vs_weak->total, r.counts.held_out);
}

TEST(Run, ArtifactsCarryProvenance) {
  const auto pc = small_planted("pipe-meta");
  run(pc.config);
  const auto& out = pc.config.output_dir;
  for (const char* f : {kRecordsFile, kNormalizedFile, kWeakLabelsFile, kClassifiedFile}) {
    const auto rows = jsonl(out / f);
    ASSERT_FALSE(rows.empty()) << f;
    EXPECT_EQ(rows[0]["_meta"]["tool"], "hca") << f;
    EXPECT_EQ(rows[0]["_meta"]["seed"], pc.config.train.seed) << f;
  }
  const auto report = jsonl(out / kReportJsonFile);
  ASSERT_EQ(report.size(), 1u);
  EXPECT_EQ(report[0]["config"]["seed"], pc.config.train.seed);
  EXPECT_EQ(report[0]["version"], kVersion);

  const auto classified = jsonl(out / kClassifiedFile);
  EXPECT_EQ(classified[1]["scores"]["kind"], "margin");
  EXPECT_EQ(classified[1]["scores"]["values"].size(), 6u);
}

TEST(Run, NoTrainableDataWhenHashtagsMissing) {
  auto pc = small_planted("pipe-empty");
  pc.config.hashtags = {"food"};
  try {
    run(pc.config);
    FAIL();
  } catch (const PipelineError& e) {
    EXPECT_NE(std::string(e.what()).find("no trainable data"), std::string::npos);
  }
}

TEST(Run, SameConfigGivesIdenticalFiles) {
  const auto pc = small_planted("pipe-det");
  run(pc.config);
  const std::string a = text::read_file(pc.config.output_dir / kClassifiedFile);
  const std::string r = text::read_file(pc.config.output_dir / kReportTextFile);
  run(pc.config);
  EXPECT_EQ(text::read_file(pc.config.output_dir / kClassifiedFile), a);
  EXPECT_EQ(text::read_file(pc.config.output_dir / kReportTextFile), r);
}

TEST(Run, EveryClassifierRuns) {
  for (auto kind : {classify::ClassifierKind::kNaiveBayes, classify::ClassifierKind::kMaxEnt}) {
    auto pc = small_planted("pipe-kinds");
    pc.config.classifier = kind;
    EXPECT_GE(run(pc.config).vs_gold->accuracy, 0.85);
  }
}

TEST(Stages, CorpusThenWeakLabelEqualsFusedRun) {
  const auto pc = small_planted("pipe-stages");
  const auto& cfg = pc.config;
  run(cfg);
  const fs::path st = cfg.output_dir.parent_path() / "stages";
  fs::create_directories(st);
  stage_build_corpus({cfg.categories, cfg.graph, cfg.max_depth, std::nullopt,
                      st / kCorpusFile, st / kConflictsFile});
  stage_weak_label({cfg.output_dir / kNormalizedFile, st / kCorpusFile, cfg.categories,
                    st / kWeakLabelsFile, cfg.train.seed});
  for (const char* f : {kCorpusFile, kConflictsFile, kWeakLabelsFile}) {
    EXPECT_EQ(text::read_file(st / f), text::read_file(cfg.output_dir / f)) << f;
  }
}

TEST(Stages, MissingArtifactNamesProducingStage) {
  const auto dir = testing::scratch_dir("pipe-missing");
  try {
    stage_weak_label({dir / "normalized.jsonl", dir / "corpus.tsv",
                      testing::shipped_data_dir() / "categories.tsv", dir / "out.jsonl", 0});
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("'normalize' stage"), std::string::npos) << e.what();
  }
}

TEST(Stages, EvalWithoutGoldIsValidationError) {
  const auto pc = small_planted("pipe-eval");
  run(pc.config);
  const fs::path dir = pc.config.output_dir;
  // Strip labels from the records artifact.
  std::string stripped;
  for (auto& row : jsonl(dir / kRecordsFile)) {
    row.erase("label");
    stripped += row.dump() + "\n";
  }
  text::write_file(dir / "nolabels.jsonl", stripped);
  EXPECT_THROW(stage_eval({dir / kClassifiedFile, dir / "nolabels.jsonl",
                           pc.config.categories, std::nullopt}),
               ValidationError);
  const auto m = stage_eval(
      {dir / kClassifiedFile, dir / kRecordsFile, pc.config.categories, std::nullopt});
  EXPECT_GE(m.accuracy, 0.9);
}

TEST(Stages, NormalizeOneRecord) {
  const auto dir = testing::scratch_dir("pipe-norm-one");
  text::write_file(dir / "raw.jsonl",
                   R"({"id":"1","text":"RT @a #EngineeringProblems Exams are haaard :("})" "\n");
  stage_ingest({dir / "raw.jsonl", ingest::Format::kJsonl, {}, dir / "records.jsonl", 5});
  const auto d = testing::shipped_data_dir();
  stage_normalize({dir / "records.jsonl",
                   {d / "stopwords.txt", d / "slang.tsv", d / "reference_vocab.txt",
                    d / "emoticons.txt"},
                   dir / "normalized.jsonl",
                   5});
  const auto rows = jsonl(dir / "normalized.jsonl");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1]["id"], "1");
  EXPECT_EQ(rows[1]["tokens"], Json::array({"exams", "hard"}));
}

TEST(Config, JsonRoundTripAndRelativePaths) {
  const auto pc = small_planted("pipe-config");
  const fs::path dir = pc.config.dataset.parent_path();
  Json j = pc.config.to_json();
  j["dataset"] = "dataset.jsonl";
  j["output_dir"] = "o";
  text::write_file(dir / "run.json", j.dump(2));
  const RunConfig back = RunConfig::load(dir / "run.json");
  EXPECT_EQ(back.dataset, dir / "dataset.jsonl");
  EXPECT_EQ(back.output_dir, dir / "o");
  EXPECT_EQ(back.train.seed, pc.config.train.seed);
  EXPECT_EQ(back.classifier, pc.config.classifier);
}

TEST(Config, ValidationErrors) {
  auto cfg = small_planted("pipe-config-bad").config;
  EXPECT_NO_THROW(cfg.validate());
  auto bad = cfg;
  bad.test_fraction = 1.0;
  EXPECT_THROW(bad.validate(), ValidationError);
  bad = cfg;
  bad.hashtags.clear();
  EXPECT_THROW(bad.validate(), ValidationError);
  bad = cfg;
  bad.graph = "/nonexistent/graph.tsv";
  EXPECT_THROW(bad.validate(), Error);
}

TEST(Cli, ExitCodes) {
  const auto pc = small_planted("pipe-cli");
  const fs::path dir = pc.config.dataset.parent_path();
  text::write_file(dir / "run.json", pc.config.to_json().dump(2));
  EXPECT_EQ(cli("run --config '" + (dir / "run.json").string() + "'"), 0);
  EXPECT_EQ(cli("run --config '" + (dir / "run.json").string() + "' --hashtags food"), 4);
  EXPECT_EQ(cli("run --config '" + (dir / "run.json").string() + "' --l2 -1"), 2);
  EXPECT_EQ(cli("run --config /nonexistent/run.json"), 3);
  EXPECT_EQ(cli("no-such-command"), 2);
  EXPECT_EQ(cli("weak-label --docs /nonexistent/n.jsonl --corpus /nonexistent/c.tsv "
                "--categories '" + pc.config.categories.string() + "' --out /tmp/x.jsonl"),
            3);
}

}  // namespace
}  // namespace hca::pipeline
