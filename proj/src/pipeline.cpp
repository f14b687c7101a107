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

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "hca/error.hpp"
#include "hca/text.hpp"

namespace hca::pipeline {
namespace {

using classify::ClassifierKind;

std::string dump_line(const Json& j) {
  return j.dump(-1, ' ', false, Json::error_handler_t::replace) + "\n";
}

// Reads an artifact produced by an earlier stage.
std::string read_artifact(const fs::path& path, const std::string& producer) {
  if (!fs::exists(path)) {
    throw IoError("missing input " + path.string() + " (produced by the '" +
                  producer + "' stage)");
  }
  return text::read_file(path);
}

// Parsed jsonl objects of an artifact, provenance line skipped.
std::vector<std::pair<std::size_t, Json>> read_jsonl_objects(
    const fs::path& path, const std::string& producer) {
  const std::string content = read_artifact(path, producer);
  std::vector<std::pair<std::size_t, Json>> out;
  std::size_t number = 0;
  for (const std::string& line : text::split(content, '\n')) {
    ++number;
    if (text::trim(line).empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw ParseError(path.string(), number, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError(path.string(), number, "expected an object");
    if (j.contains("_meta")) continue;
    out.emplace_back(number, std::move(j));
  }
  return out;
}

std::string require_string(const Json& j, const char* key,
                           const fs::path& path, std::size_t line) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw ParseError(path.string(), line,
                     std::string("missing string field '") + key + "'");
  }
  return it->get<std::string>();
}

std::size_t category_index(const std::vector<std::string>& order,
                           const std::string& name) {
  for (std::size_t c = 0; c < order.size(); ++c) {
    if (order[c] == name) return c;
  }
  throw ValidationError("unknown category '" + name + "'");
}

template <typename Fn>
auto in_stage(const std::string& stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    rethrow_with_context(e, "stage " + stage);
  }
}

std::vector<std::string> load_order(const fs::path& categories) {
  return lexicon::spec_order(lexicon::load_specs(categories));
}

std::optional<classify::Metrics> gold_metrics(
    const ingest::Dataset& ds, const std::vector<Classified>& predicted,
    const std::vector<std::string>& order) {
  std::vector<std::size_t> pred, gold;
  for (std::size_t k = 0; k < ds.records.size(); ++k) {
    const auto& rec = ds.records[k];
    if (!rec.label) continue;
    if (predicted[k].id != rec.id) {
      throw PipelineError("classified output is out of step with the records");
    }
    try {
      gold.push_back(category_index(order, *rec.label));
    } catch (const ValidationError& e) {
      throw ValidationError("record '" + rec.id + "': gold label: " + e.what());
    }
    pred.push_back(predicted[k].category);
  }
  if (gold.empty()) return std::nullopt;
  return classify::evaluate(pred, gold, order.size());
}

}  // namespace

// ---------------------------------------------------------------------------
// RunConfig

void RunConfig::validate() const {
  const auto need = [](const fs::path& p, const char* what) {
    if (p.empty()) throw ValidationError(std::string("no ") + what + " file given");
    if (!fs::exists(p)) {
      throw IoError(std::string(what) + " file not found: " + p.string());
    }
  };
  need(dataset, "dataset");
  need(normalize_files.stopwords, "stopwords");
  need(normalize_files.slang, "slang");
  need(normalize_files.reference_vocab, "reference vocabulary");
  need(normalize_files.emoticons, "emoticons");
  need(categories, "category spec");
  need(graph, "synonym graph");
  if (hashtags.empty()) throw ValidationError("hashtag filter is empty");
  if (max_depth < 0) throw ValidationError("max_depth must be >= 0");
  if (min_count == 0) throw ValidationError("min_count must be positive");
  if (!(smoothing >= 0.0)) throw ValidationError("smoothing must be >= 0");
  if (!(test_fraction >= 0.0 && test_fraction < 1.0)) {
    throw ValidationError("test_fraction must lie in [0, 1)");
  }
  train.validate();
  if (output_dir.empty()) throw ValidationError("no output directory given");
}

Json RunConfig::to_json() const {
  Json j;
  j["dataset"] = dataset.generic_string();
  j["format"] = format == ingest::Format::kJsonl ? "jsonl" : "csv";
  j["stopwords"] = normalize_files.stopwords.generic_string();
  j["slang"] = normalize_files.slang.generic_string();
  j["reference_vocab"] = normalize_files.reference_vocab.generic_string();
  j["emoticons"] = normalize_files.emoticons.generic_string();
  j["categories"] = categories.generic_string();
  j["graph"] = graph.generic_string();
  j["hashtags"] = hashtags;
  j["max_depth"] = max_depth;
  j["restrict_corpus"] = restrict_corpus;
  j["min_count"] = min_count;
  j["classifier"] = std::string(classify::kind_name(classifier));
  j["epochs"] = train.epochs;
  j["learning_rate"] = train.learning_rate;
  j["l2"] = train.l2;
  j["seed"] = train.seed;
  j["tolerance"] = train.tolerance;
  j["smoothing"] = smoothing;
  j["test_fraction"] = test_fraction;
  j["output_dir"] = output_dir.generic_string();
  return j;
}

RunConfig RunConfig::from_json(const Json& j, const fs::path& base_dir) {
  if (!j.is_object()) throw ValidationError("run config must be a JSON object");
  RunConfig cfg;
  const auto path = [&](const char* key, fs::path& out) {
    if (!j.contains(key)) return;
    fs::path p = j.at(key).get<std::string>();
    out = p.is_relative() ? base_dir / p : p;
  };
  try {
    path("dataset", cfg.dataset);
    if (j.contains("format")) {
      cfg.format = ingest::parse_format(j.at("format").get<std::string>());
    }
    path("stopwords", cfg.normalize_files.stopwords);
    path("slang", cfg.normalize_files.slang);
    path("reference_vocab", cfg.normalize_files.reference_vocab);
    path("emoticons", cfg.normalize_files.emoticons);
    path("categories", cfg.categories);
    path("graph", cfg.graph);
    if (j.contains("hashtags")) {
      cfg.hashtags.clear();
      for (const auto& t : j.at("hashtags")) {
        cfg.hashtags.insert(text::to_lower(t.get<std::string>()));
      }
    }
    if (j.contains("max_depth")) cfg.max_depth = j.at("max_depth").get<int>();
    if (j.contains("restrict_corpus")) {
      cfg.restrict_corpus = j.at("restrict_corpus").get<bool>();
    }
    if (j.contains("min_count")) cfg.min_count = j.at("min_count").get<std::uint32_t>();
    if (j.contains("classifier")) {
      cfg.classifier = classify::parse_kind(j.at("classifier").get<std::string>());
    }
    if (j.contains("epochs")) cfg.train.epochs = j.at("epochs").get<int>();
    if (j.contains("learning_rate")) {
      cfg.train.learning_rate = j.at("learning_rate").get<double>();
    }
    if (j.contains("l2")) cfg.train.l2 = j.at("l2").get<double>();
    if (j.contains("seed")) cfg.train.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("tolerance")) cfg.train.tolerance = j.at("tolerance").get<double>();
    if (j.contains("smoothing")) cfg.smoothing = j.at("smoothing").get<double>();
    if (j.contains("test_fraction")) {
      cfg.test_fraction = j.at("test_fraction").get<double>();
    }
    path("output_dir", cfg.output_dir);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("run config: ") + e.what());
  }
  return cfg;
}

RunConfig RunConfig::load(const fs::path& path) {
  const std::string content = text::read_file(path);
  Json j;
  try {
    j = Json::parse(content);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path.string() + ": invalid JSON: " + e.what());
  }
  return from_json(j, path.parent_path());
}

// ---------------------------------------------------------------------------
// Building blocks

std::vector<normalize::NormalizedDoc> normalize_all(
    const ingest::Dataset& ds, const normalize::NormalizeConfig& cfg) {
  std::vector<normalize::NormalizedDoc> docs;
  docs.reserve(ds.records.size());
  for (const auto& rec : ds.records) {
    try {
      docs.push_back(normalize::normalize(rec, cfg));
    } catch (const Error& e) {
      rethrow_with_context(e, "record '" + rec.id + "'");
    }
  }
  return docs;
}

std::vector<lexicon::WeakLabel> weak_label_all(
    const std::vector<normalize::NormalizedDoc>& docs,
    const lexicon::CategoryCorpus& corpus,
    const std::vector<std::string>& order) {
  std::vector<lexicon::WeakLabel> labels;
  labels.reserve(docs.size());
  for (const auto& d : docs) {
    try {
      labels.push_back(lexicon::weak_label(d, corpus, order));
    } catch (const Error& e) {
      rethrow_with_context(e, "record '" + d.id + "'");
    }
  }
  return labels;
}

TrainingSplit split_labeled(const std::vector<lexicon::WeakLabel>& labels,
                            double test_fraction, std::uint64_t seed) {
  std::vector<std::size_t> labeled;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k].category) labeled.push_back(k);
  }
  TrainingSplit split;
  if (test_fraction <= 0.0 || labeled.size() < 2) {
    split.train = std::move(labeled);
    return split;
  }
  const auto n_test = static_cast<std::size_t>(
      std::llround(test_fraction * double(labeled.size())));
  const auto order = ingest::shuffled_indices(labeled.size(), seed);
  for (std::size_t k = 0; k < order.size(); ++k) {
    (k < n_test ? split.held_out : split.train).push_back(labeled[order[k]]);
  }
  // Keep document order inside each part.
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.held_out.begin(), split.held_out.end());
  return split;
}

TrainedModel train_on(const std::vector<normalize::NormalizedDoc>& docs,
                      const std::vector<lexicon::WeakLabel>& labels,
                      const std::vector<std::size_t>& train_indices,
                      const std::vector<std::string>& order,
                      classify::ClassifierKind kind,
                      const classify::TrainConfig& train_cfg, double smoothing,
                      std::uint32_t min_count) {
  if (train_indices.empty()) throw PipelineError("no trainable data");
  std::vector<normalize::NormalizedDoc> train_docs;
  train_docs.reserve(train_indices.size());
  for (std::size_t k : train_indices) train_docs.push_back(docs[k]);

  TrainedModel out{features::fit_vocabulary(train_docs, min_count), {}};
  classify::LabeledSet data;
  data.category_names = order;
  data.dim = out.vocab.size();
  for (std::size_t k : train_indices) {
    if (!labels[k].category) {
      throw PipelineError("document '" + docs[k].id + "' has no weak label");
    }
    data.vectors.push_back(classify::SparseVector::from_counts(
        features::vectorize(docs[k], out.vocab)));
    data.labels.push_back(category_index(order, *labels[k].category));
  }
  std::vector<std::size_t> per_class(order.size(), 0);
  for (std::size_t y : data.labels) ++per_class[y];
  for (std::size_t c = 0; c < order.size(); ++c) {
    if (per_class[c] == 0) {
      throw PipelineError("category '" + order[c] +
                          "' has no weak-labeled training documents");
    }
  }
  out.model = classify::train(kind, data, train_cfg, smoothing);
  return out;
}

std::vector<Classified> classify_all(
    const std::vector<normalize::NormalizedDoc>& docs,
    const TrainedModel& trained) {
  std::vector<Classified> out;
  out.reserve(docs.size());
  for (const auto& d : docs) {
    try {
      const auto x = classify::SparseVector::from_counts(
          features::vectorize(d, trained.vocab));
      classify::Prediction p = classify::predict(trained.model, x);
      out.push_back({d.id, p.category, std::move(p.scores)});
    } catch (const Error& e) {
      rethrow_with_context(e, "record '" + d.id + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Artifacts

Json meta_line(const std::string& stage, std::uint64_t seed) {
  Json meta;
  meta["tool"] = kToolName;
  meta["version"] = kVersion;
  meta["stage"] = stage;
  meta["seed"] = seed;
  Json j;
  j["_meta"] = std::move(meta);
  return j;
}

std::string records_jsonl(const ingest::Dataset& ds, std::uint64_t seed) {
  return dump_line(meta_line("ingest", seed)) + ingest::to_jsonl(ds);
}

ingest::Dataset read_records(const fs::path& path) {
  const std::string content = read_artifact(path, "ingest");
  std::string body;
  for (const std::string& line : text::split(content, '\n')) {
    // Blank lines keep line numbers aligned for parse errors.
    body += line.find("\"_meta\"") != std::string::npos && body.empty()
                ? std::string()
                : line;
    body += '\n';
  }
  return ingest::parse_jsonl(body, path.string());
}

std::string normalized_jsonl(const std::vector<normalize::NormalizedDoc>& docs,
                             std::uint64_t seed) {
  std::string out = dump_line(meta_line("normalize", seed));
  for (const auto& d : docs) {
    Json j;
    j["id"] = d.id;
    j["tokens"] = d.tokens;
    out += dump_line(j);
  }
  return out;
}

std::vector<normalize::NormalizedDoc> read_normalized(const fs::path& path) {
  std::vector<normalize::NormalizedDoc> docs;
  for (auto& [line, j] : read_jsonl_objects(path, "normalize")) {
    normalize::NormalizedDoc d;
    d.id = require_string(j, "id", path, line);
    const auto it = j.find("tokens");
    if (it == j.end() || !it->is_array()) {
      throw ParseError(path.string(), line, "missing array field 'tokens'");
    }
    for (const auto& t : *it) {
      if (!t.is_string()) throw ParseError(path.string(), line, "non-string token");
      d.tokens.push_back(t.get<std::string>());
    }
    docs.push_back(std::move(d));
  }
  return docs;
}

std::string weak_labels_jsonl(const std::vector<lexicon::WeakLabel>& labels,
                              const std::vector<std::string>& order,
                              std::uint64_t seed) {
  std::string out = dump_line(meta_line("weak-label", seed));
  for (const auto& l : labels) {
    Json j;
    j["id"] = l.doc_id;
    j["category"] = l.category ? Json(*l.category) : Json(nullptr);
    Json scores = Json::object();
    for (const std::string& c : order) scores[c] = l.scores.at(c);
    j["scores"] = std::move(scores);
    out += dump_line(j);
  }
  return out;
}

std::vector<lexicon::WeakLabel> read_weak_labels(const fs::path& path) {
  std::vector<lexicon::WeakLabel> labels;
  for (auto& [line, j] : read_jsonl_objects(path, "weak-label")) {
    lexicon::WeakLabel l;
    l.doc_id = require_string(j, "id", path, line);
    const auto cat = j.find("category");
    if (cat == j.end() || !(cat->is_null() || cat->is_string())) {
      throw ParseError(path.string(), line, "'category' must be a string or null");
    }
    if (cat->is_string()) l.category = cat->get<std::string>();
    const auto scores = j.find("scores");
    if (scores == j.end() || !scores->is_object()) {
      throw ParseError(path.string(), line, "missing object field 'scores'");
    }
    for (const auto& [k, v] : scores->items()) {
      if (!v.is_number_integer()) {
        throw ParseError(path.string(), line, "scores must be integers");
      }
      l.scores[k] = v.get<int>();
    }
    labels.push_back(std::move(l));
  }
  return labels;
}

std::string classified_jsonl(const std::vector<Classified>& rows,
                             const std::vector<std::string>& order,
                             classify::ClassifierKind kind,
                             std::uint64_t seed) {
  std::string out = dump_line(meta_line("classify", seed));
  for (const auto& r : rows) {
    Json j;
    j["id"] = r.id;
    j["category"] = order.at(r.category);
    Json values = Json::object();
    for (std::size_t c = 0; c < order.size(); ++c) values[order[c]] = r.scores[c];
    Json scores;
    scores["kind"] = std::string(classify::score_kind(kind));
    scores["values"] = std::move(values);
    j["scores"] = std::move(scores);
    out += dump_line(j);
  }
  return out;
}

std::vector<Classified> read_classified(const fs::path& path,
                                        const std::vector<std::string>& order) {
  std::vector<Classified> rows;
  for (auto& [line, j] : read_jsonl_objects(path, "classify")) {
    Classified r;
    r.id = require_string(j, "id", path, line);
    try {
      r.category = category_index(order, require_string(j, "category", path, line));
    } catch (const ParseError&) {
      throw;
    } catch (const ValidationError& e) {
      throw ParseError(path.string(), line, e.what());
    }
    const Json& values = j.at("scores").at("values");
    for (const std::string& c : order) r.scores.push_back(values.at(c).get<double>());
    rows.push_back(std::move(r));
  }
  return rows;
}

Json metrics_json(const classify::Metrics& m,
                  const std::vector<std::string>& order) {
  Json j;
  j["total"] = m.total;
  j["accuracy"] = m.accuracy;
  j["macro_f1"] = m.macro_f1;
  Json per = Json::array();
  for (std::size_t c = 0; c < order.size(); ++c) {
    Json row;
    row["category"] = order[c];
    row["precision"] = m.precision[c];
    row["recall"] = m.recall[c];
    row["f1"] = m.f1[c];
    per.push_back(std::move(row));
  }
  j["per_category"] = std::move(per);
  j["confusion"] = m.confusion;
  return j;
}

// ---------------------------------------------------------------------------
// Report

Json RunReport::to_json() const {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  Json c;
  c["ingested"] = counts.ingested;
  c["filtered"] = counts.filtered;
  c["normalized"] = counts.normalized;
  c["weak_labeled"] = counts.weak_labeled;
  c["unlabeled"] = counts.unlabeled;
  c["trained"] = counts.trained;
  c["held_out"] = counts.held_out;
  c["classified"] = counts.classified;
  j["counts"] = std::move(c);
  j["corpus_size"] = corpus_size;
  j["conflicts"] = conflicts;
  j["vocabulary_size"] = vocabulary_size;
  Json weak = Json::object(), pred = Json::object();
  for (std::size_t k = 0; k < categories.size(); ++k) {
    weak[categories[k]] = weak_label_distribution[k];
    pred[categories[k]] = predicted_distribution[k];
  }
  j["weak_label_distribution"] = std::move(weak);
  j["predicted_distribution"] = std::move(pred);
  j["metrics_vs_weak"] = vs_weak ? metrics_json(*vs_weak, categories) : Json(nullptr);
  j["metrics_vs_gold"] = vs_gold ? metrics_json(*vs_gold, categories) : Json(nullptr);
  j["config"] = config;
  return j;
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(4);
  os << kToolName << " " << kVersion << " run report\n\n";
  os << "stage counts\n"
     << "  ingested      " << counts.ingested << "\n"
     << "  filtered      " << counts.filtered << "\n"
     << "  normalized    " << counts.normalized << "\n"
     << "  weak-labeled  " << counts.weak_labeled << "\n"
     << "  unlabeled     " << counts.unlabeled << "\n"
     << "  trained       " << counts.trained << "\n"
     << "  held out      " << counts.held_out << "\n"
     << "  classified    " << counts.classified << "\n\n";
  os << "corpus: " << corpus_size << " words, " << conflicts
     << " conflicts; vocabulary: " << vocabulary_size << " words\n\n";
  os << "category                 weak  predicted\n";
  for (std::size_t k = 0; k < categories.size(); ++k) {
    std::string name = categories[k];
    name.resize(std::max<std::size_t>(name.size(), 24), ' ');
    os << name << " " << weak_label_distribution[k] << "  "
       << predicted_distribution[k] << "\n";
  }
  const auto metrics = [&](const char* title,
                           const std::optional<classify::Metrics>& m) {
    os << "\n" << title << ": ";
    if (!m) {
      os << "n/a\n";
      return;
    }
    os << "accuracy " << m->accuracy << ", macro F1 " << m->macro_f1 << " over "
       << m->total << " documents\n";
    for (std::size_t k = 0; k < categories.size(); ++k) {
      os << "  " << categories[k] << ": P " << m->precision[k] << " R "
         << m->recall[k] << " F1 " << m->f1[k] << "\n";
    }
  };
  metrics("held-out weak labels", vs_weak);
  metrics("gold labels", vs_gold);
  os << "\nconfig: " << config.dump() << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Full run

RunReport run(const RunConfig& cfg) {
  cfg.validate();
  const std::uint64_t seed = cfg.train.seed;
  RunReport report;
  report.config = cfg.to_json();

  const ingest::Dataset raw = in_stage("ingest", [&] {
    return ingest::read_dataset(cfg.dataset, cfg.format);
  });
  const ingest::Dataset ds = in_stage("ingest", [&] {
    return ingest::filter_by_hashtags(raw, cfg.hashtags);
  });
  report.counts.ingested = raw.records.size();
  report.counts.filtered = ds.records.size();

  const auto norm_cfg = in_stage("normalize", [&] {
    return normalize::load_config(cfg.normalize_files);
  });
  const auto docs = in_stage("normalize", [&] { return normalize_all(ds, norm_cfg); });
  report.counts.normalized = docs.size();

  const auto specs = in_stage("build-corpus", [&] {
    return lexicon::load_specs(cfg.categories);
  });
  const auto order = lexicon::spec_order(specs);
  report.categories = order;
  lexicon::CategoryCorpus corpus = in_stage("build-corpus", [&] {
    return lexicon::build_corpus(specs, lexicon::load_graph(cfg.graph),
                                 cfg.max_depth);
  });
  if (cfg.restrict_corpus) {
    std::set<std::string> words;
    for (const auto& d : docs) words.insert(d.tokens.begin(), d.tokens.end());
    corpus = lexicon::restrict_to(corpus, words);
  }
  report.corpus_size = corpus.entries.size();
  report.conflicts = corpus.conflicts.size();

  const auto labels = in_stage("weak-label", [&] {
    return weak_label_all(docs, corpus, order);
  });
  report.weak_label_distribution.assign(order.size(), 0);
  for (const auto& l : labels) {
    if (l.category) {
      ++report.counts.weak_labeled;
      ++report.weak_label_distribution[category_index(order, *l.category)];
    } else {
      ++report.counts.unlabeled;
    }
  }
  if (report.counts.weak_labeled == 0) {
    throw PipelineError("no trainable data: no document received a weak label");
  }

  const TrainingSplit split = split_labeled(labels, cfg.test_fraction, seed);
  const TrainedModel trained = in_stage("train", [&] {
    return train_on(docs, labels, split.train, order, cfg.classifier, cfg.train,
                    cfg.smoothing, cfg.min_count);
  });
  report.counts.trained = split.train.size();
  report.counts.held_out = split.held_out.size();
  report.vocabulary_size = trained.vocab.size();

  const auto predicted = in_stage("classify", [&] { return classify_all(docs, trained); });
  report.counts.classified = predicted.size();
  report.predicted_distribution.assign(order.size(), 0);
  for (const auto& p : predicted) ++report.predicted_distribution[p.category];

  if (!split.held_out.empty()) {
    std::vector<std::size_t> pred, gold;
    for (std::size_t k : split.held_out) {
      pred.push_back(predicted[k].category);
      gold.push_back(category_index(order, *labels[k].category));
    }
    report.vs_weak = classify::evaluate(pred, gold, order.size());
  }
  report.vs_gold = in_stage("eval", [&] { return gold_metrics(ds, predicted, order); });

  const fs::path& out = cfg.output_dir;
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw IoError("cannot create " + out.string() + ": " + ec.message());
  text::write_file(out / kRecordsFile, records_jsonl(ds, seed));
  text::write_file(out / kNormalizedFile, normalized_jsonl(docs, seed));
  text::write_file(out / kCorpusFile, lexicon::dump_corpus(corpus));
  text::write_file(out / kConflictsFile, lexicon::dump_conflicts(corpus));
  text::write_file(out / kWeakLabelsFile, weak_labels_jsonl(labels, order, seed));
  text::write_file(out / kVocabFile, features::dump_vocabulary(trained.vocab));
  text::write_file(out / kModelFile, classify::write_model(trained.model));
  text::write_file(out / kClassifiedFile,
                   classified_jsonl(predicted, order, cfg.classifier, seed));
  text::write_file(out / kReportJsonFile, dump_line(report.to_json()));
  text::write_file(out / kReportTextFile, report.to_text());
  return report;
}

// ---------------------------------------------------------------------------
// Stage commands

StageCounts stage_ingest(const IngestParams& p) {
  return in_stage("ingest", [&] {
    StageCounts counts;
    ingest::Dataset ds = ingest::read_dataset(p.input, p.format);
    counts.ingested = ds.records.size();
    if (!p.hashtags.empty()) ds = ingest::filter_by_hashtags(ds, p.hashtags);
    counts.filtered = ds.records.size();
    text::write_file(p.output, records_jsonl(ds, p.seed));
    return counts;
  });
}

void stage_normalize(const NormalizeParams& p) {
  in_stage("normalize", [&] {
    const ingest::Dataset ds = read_records(p.input);
    const auto cfg = normalize::load_config(p.files);
    text::write_file(p.output, normalized_jsonl(normalize_all(ds, cfg), p.seed));
  });
}

lexicon::CategoryCorpus stage_build_corpus(const CorpusParams& p) {
  return in_stage("build-corpus", [&] {
    const auto specs = lexicon::load_specs(p.categories);
    lexicon::CategoryCorpus corpus = lexicon::build_corpus(
        specs, lexicon::load_graph(p.graph), p.max_depth);
    if (p.restrict_docs) {
      std::set<std::string> words;
      for (const auto& d : read_normalized(*p.restrict_docs)) {
        words.insert(d.tokens.begin(), d.tokens.end());
      }
      corpus = lexicon::restrict_to(corpus, words);
    }
    text::write_file(p.output, lexicon::dump_corpus(corpus));
    if (p.conflicts_output) {
      text::write_file(*p.conflicts_output, lexicon::dump_conflicts(corpus));
    }
    return corpus;
  });
}

void stage_weak_label(const WeakLabelParams& p) {
  in_stage("weak-label", [&] {
    const auto docs = read_normalized(p.docs);
    const auto corpus = lexicon::parse_corpus(
        read_artifact(p.corpus, "build-corpus"), p.corpus.string());
    const auto order = load_order(p.categories);
    text::write_file(p.output,
                     weak_labels_jsonl(weak_label_all(docs, corpus, order), order,
                                       p.seed));
  });
}

void stage_train(const TrainParams& p) {
  in_stage("train", [&] {
    const auto docs = read_normalized(p.docs);
    const auto labels = read_weak_labels(p.labels);
    if (labels.size() != docs.size()) {
      throw ValidationError("weak labels cover " + std::to_string(labels.size()) +
                            " documents but there are " +
                            std::to_string(docs.size()));
    }
    for (std::size_t k = 0; k < docs.size(); ++k) {
      if (labels[k].doc_id != docs[k].id) {
        throw ValidationError("weak label for '" + labels[k].doc_id +
                              "' does not line up with document '" +
                              docs[k].id + "'");
      }
    }
    const auto order = load_order(p.categories);
    const TrainingSplit split = split_labeled(labels, p.test_fraction, p.train.seed);
    if (split.train.empty() && split.held_out.empty()) {
      throw PipelineError("no trainable data: no document has a weak label");
    }
    const TrainedModel trained =
        train_on(docs, labels, split.train, order, p.kind, p.train, p.smoothing,
                 p.min_count);
    text::write_file(p.vocab_output, features::dump_vocabulary(trained.vocab));
    text::write_file(p.model_output, classify::write_model(trained.model));
  });
}

void stage_classify(const ClassifyParams& p) {
  in_stage("classify", [&] {
    const auto docs = read_normalized(p.docs);
    TrainedModel trained{
        features::parse_vocabulary(read_artifact(p.vocab, "train"), p.vocab.string()),
        classify::read_model(read_artifact(p.model, "train"), p.model.string())};
    const auto order = load_order(p.categories);
    if (classify::model_classes(trained.model) != order.size()) {
      throw ValidationError("model has " +
                            std::to_string(classify::model_classes(trained.model)) +
                            " categories, category file lists " +
                            std::to_string(order.size()));
    }
    if (classify::model_dim(trained.model) != trained.vocab.size()) {
      throw ValidationError("model dimension does not match the vocabulary");
    }
    text::write_file(p.output,
                     classified_jsonl(classify_all(docs, trained), order,
                                      classify::model_kind(trained.model), p.seed));
  });
}

classify::Metrics stage_eval(const EvalParams& p) {
  return in_stage("eval", [&] {
    const auto order = load_order(p.categories);
    const auto rows = read_classified(p.classified, order);
    const ingest::Dataset gold = read_records(p.gold);
    std::map<std::string, std::size_t> predicted;
    for (const auto& r : rows) predicted.emplace(r.id, r.category);
    std::vector<std::size_t> pred, truth;
    for (const auto& rec : gold.records) {
      if (!rec.label) continue;
      const auto it = predicted.find(rec.id);
      if (it == predicted.end()) {
        throw ValidationError("record '" + rec.id + "' has no classification");
      }
      truth.push_back(category_index(order, *rec.label));
      pred.push_back(it->second);
    }
    if (truth.empty()) {
      throw ValidationError("no gold labels in " + p.gold.string());
    }
    const classify::Metrics m = classify::evaluate(pred, truth, order.size());
    if (p.output) text::write_file(*p.output, dump_line(metrics_json(m, order)));
    return m;
  });
}

}  // namespace hca::pipeline
