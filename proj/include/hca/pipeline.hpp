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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hca/classify.hpp"
#include "hca/features.hpp"
#include "hca/ingest.hpp"
#include "hca/lexicon.hpp"
#include "hca/normalize.hpp"
#include "json.hpp"

// End-to-end orchestration: ingest, normalize, build the category corpus,
// weak-label, train, classify and report. run() executes every stage in
// memory; the stage_* functions expose the same steps file-to-file so they
// can be chained from the command line with identical results.
namespace hca::pipeline {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "hca";
inline constexpr const char* kVersion = HCA_VERSION;

// Artifact names written by run() into the output directory.
inline constexpr const char* kRecordsFile = "records.jsonl";
inline constexpr const char* kNormalizedFile = "normalized.jsonl";
inline constexpr const char* kCorpusFile = "corpus.tsv";
inline constexpr const char* kConflictsFile = "conflicts.tsv";
inline constexpr const char* kWeakLabelsFile = "weak_labels.jsonl";
inline constexpr const char* kVocabFile = "vocab.tsv";
inline constexpr const char* kModelFile = "model.txt";
inline constexpr const char* kClassifiedFile = "classified.jsonl";
inline constexpr const char* kReportJsonFile = "report.jsonl";
inline constexpr const char* kReportTextFile = "report.txt";

struct RunConfig {
  fs::path dataset;
  ingest::Format format = ingest::Format::kJsonl;
  normalize::ConfigPaths normalize_files;
  fs::path categories;
  fs::path graph;
  std::set<std::string> hashtags = {"engineeringproblems", "engineeringperks"};
  int max_depth = 2;
  // Keep only corpus words that occur in the normalized dataset.
  bool restrict_corpus = false;
  std::uint32_t min_count = 1;
  classify::ClassifierKind classifier = classify::ClassifierKind::kSvm;
  classify::TrainConfig train;
  double smoothing = 1.0;
  // Share of weak-labeled documents held out from training (0 disables).
  double test_fraction = 0.2;
  fs::path output_dir = "hca-out";

  // Checks ranges and that every referenced input file exists.
  void validate() const;
  Json to_json() const;
  // Relative paths in `j` are resolved against `base_dir`. Missing keys keep
  // their defaults.
  static RunConfig from_json(const Json& j, const fs::path& base_dir);
  static RunConfig load(const fs::path& path);
};

struct StageCounts {
  std::size_t ingested = 0;
  std::size_t filtered = 0;
  std::size_t normalized = 0;
  std::size_t weak_labeled = 0;
  std::size_t unlabeled = 0;
  std::size_t trained = 0;
  std::size_t held_out = 0;
  std::size_t classified = 0;
};

struct RunReport {
  StageCounts counts;
  std::size_t corpus_size = 0;
  std::size_t conflicts = 0;
  std::size_t vocabulary_size = 0;
  std::vector<std::string> categories;
  std::vector<std::size_t> weak_label_distribution;  // per category
  std::vector<std::size_t> predicted_distribution;   // per category
  std::optional<classify::Metrics> vs_weak;  // on held-out weak labels
  std::optional<classify::Metrics> vs_gold;  // on records carrying a label
  Json config;

  Json to_json() const;
  std::string to_text() const;
};

// Runs every stage and writes all artifacts into cfg.output_dir. Throws
// PipelineError("no trainable data") when nothing gets a weak label.
RunReport run(const RunConfig& cfg);

// ---------------------------------------------------------------------------
// Building blocks shared by run() and the stage commands.

std::vector<normalize::NormalizedDoc> normalize_all(
    const ingest::Dataset& ds, const normalize::NormalizeConfig& cfg);

std::vector<lexicon::WeakLabel> weak_label_all(
    const std::vector<normalize::NormalizedDoc>& docs,
    const lexicon::CategoryCorpus& corpus,
    const std::vector<std::string>& order);

// Weak-labeled document indices split into training and held-out parts.
struct TrainingSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> held_out;
};
TrainingSplit split_labeled(const std::vector<lexicon::WeakLabel>& labels,
                            double test_fraction, std::uint64_t seed);

struct TrainedModel {
  features::Vocabulary vocab;
  classify::Model model;
};
TrainedModel train_on(const std::vector<normalize::NormalizedDoc>& docs,
                      const std::vector<lexicon::WeakLabel>& labels,
                      const std::vector<std::size_t>& train_indices,
                      const std::vector<std::string>& order,
                      classify::ClassifierKind kind,
                      const classify::TrainConfig& train_cfg, double smoothing,
                      std::uint32_t min_count);

struct Classified {
  std::string id;
  std::size_t category = 0;
  std::vector<double> scores;
};
std::vector<Classified> classify_all(
    const std::vector<normalize::NormalizedDoc>& docs,
    const TrainedModel& trained);

// ---------------------------------------------------------------------------
// Artifact formats. Every jsonl artifact starts with a provenance line
// {"_meta": {"tool", "version", "stage", "seed"}}; readers skip it.

Json meta_line(const std::string& stage, std::uint64_t seed);

std::string records_jsonl(const ingest::Dataset& ds, std::uint64_t seed);
ingest::Dataset read_records(const fs::path& path);

std::string normalized_jsonl(const std::vector<normalize::NormalizedDoc>& docs,
                             std::uint64_t seed);
std::vector<normalize::NormalizedDoc> read_normalized(const fs::path& path);

std::string weak_labels_jsonl(const std::vector<lexicon::WeakLabel>& labels,
                              const std::vector<std::string>& order,
                              std::uint64_t seed);
std::vector<lexicon::WeakLabel> read_weak_labels(const fs::path& path);

std::string classified_jsonl(const std::vector<Classified>& rows,
                             const std::vector<std::string>& order,
                             classify::ClassifierKind kind,
                             std::uint64_t seed);
std::vector<Classified> read_classified(const fs::path& path,
                                        const std::vector<std::string>& order);

Json metrics_json(const classify::Metrics& m,
                  const std::vector<std::string>& order);

// ---------------------------------------------------------------------------
// Stage commands. Each reads the previous stage's artifact and writes its own.
// A missing input artifact raises IoError naming the stage that produces it.

struct IngestParams {
  fs::path input;
  ingest::Format format = ingest::Format::kJsonl;
  std::set<std::string> hashtags;  // empty keeps every record
  fs::path output;
  std::uint64_t seed = 0;
};
StageCounts stage_ingest(const IngestParams& p);

struct NormalizeParams {
  fs::path input;  // records jsonl
  normalize::ConfigPaths files;
  fs::path output;
  std::uint64_t seed = 0;
};
void stage_normalize(const NormalizeParams& p);

struct CorpusParams {
  fs::path categories;
  fs::path graph;
  int max_depth = 2;
  std::optional<fs::path> restrict_docs;  // normalized jsonl
  fs::path output;
  std::optional<fs::path> conflicts_output;
};
lexicon::CategoryCorpus stage_build_corpus(const CorpusParams& p);

struct WeakLabelParams {
  fs::path docs;  // normalized jsonl
  fs::path corpus;
  fs::path categories;
  fs::path output;
  std::uint64_t seed = 0;
};
void stage_weak_label(const WeakLabelParams& p);

struct TrainParams {
  fs::path docs;    // normalized jsonl
  fs::path labels;  // weak labels jsonl
  fs::path categories;
  classify::ClassifierKind kind = classify::ClassifierKind::kSvm;
  classify::TrainConfig train;
  double smoothing = 1.0;
  std::uint32_t min_count = 1;
  double test_fraction = 0.2;
  fs::path vocab_output;
  fs::path model_output;
};
void stage_train(const TrainParams& p);

struct ClassifyParams {
  fs::path docs;  // normalized jsonl
  fs::path vocab;
  fs::path model;
  fs::path categories;
  fs::path output;
  std::uint64_t seed = 0;
};
void stage_classify(const ClassifyParams& p);

struct EvalParams {
  fs::path classified;
  fs::path gold;  // records jsonl carrying labels
  fs::path categories;
  std::optional<fs::path> output;
};
// Throws ValidationError when no record carries a gold label.
classify::Metrics stage_eval(const EvalParams& p);

}  // namespace hca::pipeline
