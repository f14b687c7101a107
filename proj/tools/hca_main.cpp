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

// Command-line front end: `hca run` executes the whole pipeline, the other
// subcommands run one stage each on file artifacts.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hca/error.hpp"
#include "hca/pipeline.hpp"
#include "hca/text.hpp"

namespace {

using hca::pipeline::fs::path;
namespace pl = hca::pipeline;
namespace cls = hca::classify;

std::set<std::string> parse_hashtags(const std::string& csv) {
  std::set<std::string> tags;
  for (const std::string& t : hca::text::split(csv, ',')) {
    std::string_view v = hca::text::trim(t);
    if (!v.empty() && v.front() == '#') v.remove_prefix(1);
    if (!v.empty()) tags.insert(hca::text::to_lower(v));
  }
  return tags;
}

struct TrainOptions {
  std::optional<std::string> classifier;
  std::optional<int> epochs;
  std::optional<double> learning_rate;
  std::optional<double> l2;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  std::optional<double> smoothing;
  std::optional<std::uint32_t> min_count;
  std::optional<double> test_fraction;

  void add_to(CLI::App* app) {
    app->add_option("--classifier", classifier, "nb, maxent or svm");
    app->add_option("--epochs", epochs, "training epochs");
    app->add_option("--learning-rate", learning_rate, "optimizer step size");
    app->add_option("--l2", l2, "L2 regularization strength");
    app->add_option("--seed", seed, "seed for the held-out split");
    app->add_option("--tolerance", tolerance, "gradient max-norm stopping threshold");
    app->add_option("--smoothing", smoothing, "Naive Bayes additive smoothing");
    app->add_option("--min-count", min_count, "minimum token count for the vocabulary");
    app->add_option("--test-fraction", test_fraction,
                    "share of weak-labeled documents held out from training");
  }

  void apply(cls::ClassifierKind& kind, cls::TrainConfig& train, double& smooth,
             std::uint32_t& min, double& fraction) const {
    if (classifier) kind = cls::parse_kind(*classifier);
    if (epochs) train.epochs = *epochs;
    if (learning_rate) train.learning_rate = *learning_rate;
    if (l2) train.l2 = *l2;
    if (seed) train.seed = *seed;
    if (tolerance) train.tolerance = *tolerance;
    if (smoothing) smooth = *smoothing;
    if (min_count) min = *min_count;
    if (test_fraction) fraction = *test_fraction;
  }
};

struct NormalizeFiles {
  std::string stopwords, slang, reference_vocab, emoticons;

  void add_to(CLI::App* app, bool required) {
    auto* a = app->add_option("--stopwords", stopwords, "stop word list");
    auto* b = app->add_option("--slang", slang, "slang table (key<TAB>expansion)");
    auto* c = app->add_option("--reference-vocab", reference_vocab,
                              "word list used to resolve elongations");
    auto* d = app->add_option("--emoticons", emoticons, "emoticon literals");
    if (required) {
      for (auto* o : {a, b, c, d}) o->required();
    }
  }

  void apply(hca::normalize::ConfigPaths& p) const {
    if (!stopwords.empty()) p.stopwords = stopwords;
    if (!slang.empty()) p.slang = slang;
    if (!reference_vocab.empty()) p.reference_vocab = reference_vocab;
    if (!emoticons.empty()) p.emoticons = emoticons;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid lexicon + machine-learning classifier for short posts"};
  app.set_version_flag("--version", std::string(pl::kVersion));
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run every stage end to end");
  std::string config_path, dataset, format, categories, graph, hashtags, out;
  std::optional<int> max_depth;
  bool restrict_corpus = false;
  NormalizeFiles run_files;
  TrainOptions run_train;
  run->add_option("--config", config_path, "JSON run configuration");
  run->add_option("--dataset", dataset, "input dataset");
  run->add_option("--format", format, "jsonl or csv");
  run_files.add_to(run, false);
  run->add_option("--categories", categories, "category spec file");
  run->add_option("--graph", graph, "synonym graph file");
  run->add_option("--hashtags", hashtags, "comma-separated hashtag filter");
  run->add_option("--max-depth", max_depth, "lexicon expansion depth");
  run->add_flag("--restrict-corpus", restrict_corpus,
                "keep only corpus words that occur in the dataset");
  run_train.add_to(run);
  run->add_option("--out", out, "output directory");

  // ingest
  auto* ing = app.add_subcommand("ingest", "read and hashtag-filter a dataset");
  pl::IngestParams ing_p;
  std::string ing_format = "jsonl", ing_tags;
  ing->add_option("--input", ing_p.input, "raw dataset")->required();
  ing->add_option("--format", ing_format, "jsonl or csv");
  ing->add_option("--hashtags", ing_tags, "comma-separated hashtag filter");
  ing->add_option("--out", ing_p.output, "records jsonl")->required();
  ing->add_option("--seed", ing_p.seed, "seed recorded in the output");

  // normalize
  auto* nrm = app.add_subcommand("normalize", "normalize ingested records");
  pl::NormalizeParams nrm_p;
  NormalizeFiles nrm_files;
  nrm->add_option("--input", nrm_p.input, "records jsonl")->required();
  nrm_files.add_to(nrm, true);
  nrm->add_option("--out", nrm_p.output, "normalized jsonl")->required();
  nrm->add_option("--seed", nrm_p.seed, "seed recorded in the output");

  // build-corpus
  auto* bc = app.add_subcommand("build-corpus", "expand seeds into category corpora");
  pl::CorpusParams bc_p;
  std::string bc_restrict, bc_conflicts;
  bc->add_option("--categories", bc_p.categories, "category spec file")->required();
  bc->add_option("--graph", bc_p.graph, "synonym graph file")->required();
  bc->add_option("--max-depth", bc_p.max_depth, "expansion depth");
  bc->add_option("--restrict-to", bc_restrict,
                 "normalized jsonl whose vocabulary bounds the corpus");
  bc->add_option("--out", bc_p.output, "corpus tsv")->required();
  bc->add_option("--conflicts-out", bc_conflicts, "tied words tsv");

  // weak-label
  auto* wl = app.add_subcommand("weak-label", "label documents from the corpus");
  pl::WeakLabelParams wl_p;
  wl->add_option("--docs", wl_p.docs, "normalized jsonl")->required();
  wl->add_option("--corpus", wl_p.corpus, "corpus tsv")->required();
  wl->add_option("--categories", wl_p.categories, "category spec file")->required();
  wl->add_option("--out", wl_p.output, "weak labels jsonl")->required();
  wl->add_option("--seed", wl_p.seed, "seed recorded in the output");

  // train
  auto* tr = app.add_subcommand("train", "train a classifier on weak labels");
  pl::TrainParams tr_p;
  TrainOptions tr_opts;
  tr->add_option("--docs", tr_p.docs, "normalized jsonl")->required();
  tr->add_option("--labels", tr_p.labels, "weak labels jsonl")->required();
  tr->add_option("--categories", tr_p.categories, "category spec file")->required();
  tr_opts.add_to(tr);
  tr->add_option("--vocab-out", tr_p.vocab_output, "vocabulary tsv")->required();
  tr->add_option("--model-out", tr_p.model_output, "model file")->required();

  // classify
  auto* cl = app.add_subcommand("classify", "classify documents with a model");
  pl::ClassifyParams cl_p;
  cl->add_option("--docs", cl_p.docs, "normalized jsonl")->required();
  cl->add_option("--vocab", cl_p.vocab, "vocabulary tsv")->required();
  cl->add_option("--model", cl_p.model, "model file")->required();
  cl->add_option("--categories", cl_p.categories, "category spec file")->required();
  cl->add_option("--out", cl_p.output, "classified jsonl")->required();
  cl->add_option("--seed", cl_p.seed, "seed recorded in the output");

  // eval
  auto* ev = app.add_subcommand("eval", "score classifications against gold labels");
  pl::EvalParams ev_p;
  std::string ev_out;
  ev->add_option("--classified", ev_p.classified, "classified jsonl")->required();
  ev->add_option("--gold", ev_p.gold, "records jsonl with labels")->required();
  ev->add_option("--categories", ev_p.categories, "category spec file")->required();
  ev->add_option("--out", ev_out, "metrics json line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*run) {
      pl::RunConfig cfg = config_path.empty()
                              ? pl::RunConfig{}
                              : pl::RunConfig::load(config_path);
      if (!dataset.empty()) cfg.dataset = dataset;
      if (!format.empty()) cfg.format = hca::ingest::parse_format(format);
      run_files.apply(cfg.normalize_files);
      if (!categories.empty()) cfg.categories = categories;
      if (!graph.empty()) cfg.graph = graph;
      if (!hashtags.empty()) cfg.hashtags = parse_hashtags(hashtags);
      if (max_depth) cfg.max_depth = *max_depth;
      if (restrict_corpus) cfg.restrict_corpus = true;
      run_train.apply(cfg.classifier, cfg.train, cfg.smoothing, cfg.min_count,
                      cfg.test_fraction);
      if (!out.empty()) cfg.output_dir = out;
      const pl::RunReport report = pl::run(cfg);
      std::cout << report.to_text();
    } else if (*ing) {
      ing_p.format = hca::ingest::parse_format(ing_format);
      ing_p.hashtags = parse_hashtags(ing_tags);
      const auto counts = pl::stage_ingest(ing_p);
      std::cout << "ingested " << counts.ingested << ", kept " << counts.filtered
                << "\n";
    } else if (*nrm) {
      nrm_files.apply(nrm_p.files);
      pl::stage_normalize(nrm_p);
    } else if (*bc) {
      if (!bc_restrict.empty()) bc_p.restrict_docs = bc_restrict;
      if (!bc_conflicts.empty()) bc_p.conflicts_output = bc_conflicts;
      const auto corpus = pl::stage_build_corpus(bc_p);
      std::cout << corpus.entries.size() << " corpus words, "
                << corpus.conflicts.size() << " conflicts\n";
    } else if (*wl) {
      pl::stage_weak_label(wl_p);
    } else if (*tr) {
      tr_opts.apply(tr_p.kind, tr_p.train, tr_p.smoothing, tr_p.min_count,
                    tr_p.test_fraction);
      pl::stage_train(tr_p);
    } else if (*cl) {
      pl::stage_classify(cl_p);
    } else if (*ev) {
      if (!ev_out.empty()) ev_p.output = ev_out;
      const auto m = pl::stage_eval(ev_p);
      std::cout << "accuracy " << m.accuracy << ", macro F1 " << m.macro_f1
                << " over " << m.total << " documents\n";
    }
  } catch (const hca::Error& e) {
    std::cerr << "hca: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "hca: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
