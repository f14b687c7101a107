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

#include "hca/lexicon.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "hca/error.hpp"
#include "hca/text.hpp"

namespace hca::lexicon {

std::string_view polarity_name(Polarity p) {
  return p == Polarity::kProblem ? "problem" : "perk";
}

Polarity parse_polarity(std::string_view s) {
  if (s == "problem") return Polarity::kProblem;
  if (s == "perk") return Polarity::kPerk;
  throw ValidationError("unknown polarity '" + std::string(s) +
                        "' (expected problem or perk)");
}

void validate_specs(const std::vector<CategorySpec>& specs) {
  if (specs.empty()) throw ValidationError("no category specs given");
  std::map<std::string, const CategorySpec*> by_name;
  for (const CategorySpec& s : specs) {
    if (s.name.empty()) throw ValidationError("category with empty name");
    if (!by_name.emplace(s.name, &s).second) {
      throw ValidationError("duplicate category '" + s.name + "'");
    }
    if (s.seeds.empty()) {
      throw ValidationError("category '" + s.name + "' has no seed words");
    }
    for (const std::string& seed : s.seeds) {
      if (seed.empty() || text::to_lower(seed) != seed) {
        throw ValidationError("category '" + s.name + "': seed '" + seed +
                              "' must be non-empty lowercase");
      }
    }
  }
  for (const CategorySpec& s : specs) {
    if (!s.counterpart) continue;
    const auto it = by_name.find(*s.counterpart);
    if (it == by_name.end()) {
      throw ValidationError("category '" + s.name + "' names missing counterpart '" +
                            *s.counterpart + "'");
    }
    if (it->second->polarity == s.polarity) {
      throw ValidationError("category '" + s.name + "': counterpart '" +
                            *s.counterpart + "' has the same polarity");
    }
  }
}

std::vector<CategorySpec> load_specs(const std::filesystem::path& path) {
  std::vector<CategorySpec> specs;
  for (const auto& line : text::read_config_lines(path)) {
    const auto fields = text::split(line.text, '\t');
    if (fields.size() != 4) {
      throw ParseError(path.string(), line.number,
                       "expected name<TAB>polarity<TAB>counterpart<TAB>seeds");
    }
    CategorySpec spec;
    spec.name = std::string(text::trim(fields[0]));
    try {
      spec.polarity = parse_polarity(text::trim(fields[1]));
    } catch (const ValidationError& e) {
      throw ParseError(path.string(), line.number, e.what());
    }
    const std::string_view cp = text::trim(fields[2]);
    if (cp != "-" && !cp.empty()) spec.counterpart = std::string(cp);
    for (std::string& w : text::split_whitespace(text::to_lower(fields[3]))) {
      spec.seeds.insert(std::move(w));
    }
    specs.push_back(std::move(spec));
  }
  validate_specs(specs);
  return specs;
}

std::vector<std::string> spec_order(const std::vector<CategorySpec>& specs) {
  std::vector<std::string> order;
  order.reserve(specs.size());
  for (const CategorySpec& s : specs) order.push_back(s.name);
  return order;
}

void SynonymGraph::add_node(const std::string& w) { nodes_.insert(w); }

void SynonymGraph::add_edge(const std::string& a, const std::string& b,
                            EdgeKind kind) {
  if (a == b) throw ValidationError("self-loop on '" + a + "'");
  auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  if (const auto it = edges_.find(key); it != edges_.end()) {
    if (it->second != kind) {
      throw ValidationError("words '" + key.first + "' and '" + key.second +
                            "' are linked as both synonym and antonym");
    }
    return;
  }
  edges_.emplace(key, kind);
  nodes_.insert(a);
  nodes_.insert(b);
  const auto insert_sorted = [](std::vector<Neighbor>& v, Neighbor n) {
    const auto pos = std::lower_bound(
        v.begin(), v.end(), n,
        [](const Neighbor& x, const Neighbor& y) { return x.word < y.word; });
    v.insert(pos, std::move(n));
  };
  insert_sorted(adjacency_[a], {b, kind});
  insert_sorted(adjacency_[b], {a, kind});
}

const std::vector<SynonymGraph::Neighbor>& SynonymGraph::neighbors(
    const std::string& w) const {
  static const std::vector<Neighbor> kNone;
  const auto it = adjacency_.find(w);
  return it == adjacency_.end() ? kNone : it->second;
}

SynonymGraph load_graph(const std::filesystem::path& path) {
  SynonymGraph g;
  for (const auto& line : text::read_config_lines(path)) {
    const auto fields = text::split(line.text, '\t');
    if (fields.size() != 3) {
      throw ParseError(path.string(), line.number,
                       "expected word1<TAB>word2<TAB>synonym|antonym");
    }
    const std::string a = text::to_lower(text::trim(fields[0]));
    const std::string b = text::to_lower(text::trim(fields[1]));
    const std::string_view kind = text::trim(fields[2]);
    if (a.empty() || b.empty()) {
      throw ParseError(path.string(), line.number, "empty word");
    }
    EdgeKind k;
    if (kind == "synonym") {
      k = EdgeKind::kSynonym;
    } else if (kind == "antonym") {
      k = EdgeKind::kAntonym;
    } else {
      throw ParseError(path.string(), line.number,
                       "edge kind must be synonym or antonym");
    }
    try {
      g.add_edge(a, b, k);
    } catch (const ValidationError& e) {
      throw ParseError(path.string(), line.number, e.what());
    }
  }
  return g;
}

std::vector<Expansion> expand_seeds(const CategorySpec& spec,
                                    const std::vector<CategorySpec>& specs,
                                    const SynonymGraph& graph, int max_depth) {
  (void)specs;  // counterpart existence is checked by validate_specs
  if (max_depth < 0) throw ValidationError("max_depth must be >= 0");

  std::map<std::string, int> depth;
  std::deque<std::string> queue;
  for (const std::string& s : spec.seeds) {
    depth.emplace(s, 0);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const std::string w = std::move(queue.front());
    queue.pop_front();
    const int d = depth.at(w);
    if (d >= max_depth) continue;
    for (const auto& n : graph.neighbors(w)) {
      if (n.kind != EdgeKind::kSynonym) continue;
      if (depth.emplace(n.word, d + 1).second) queue.push_back(n.word);
    }
  }

  std::map<std::string, int> flipped;
  if (spec.counterpart) {
    for (const auto& [w, d] : depth) {
      if (d >= max_depth) continue;
      for (const auto& n : graph.neighbors(w)) {
        if (n.kind != EdgeKind::kAntonym) continue;
        auto [it, inserted] = flipped.emplace(n.word, d + 1);
        if (!inserted) it->second = std::min(it->second, d + 1);
      }
    }
  }

  std::vector<Expansion> out;
  out.reserve(depth.size() + flipped.size());
  for (const auto& [w, d] : depth) out.push_back({w, spec.name, d});
  for (const auto& [w, d] : flipped) out.push_back({w, *spec.counterpart, d});
  std::sort(out.begin(), out.end());
  return out;
}

CategoryCorpus build_corpus(const std::vector<CategorySpec>& specs,
                            const SynonymGraph& graph, int max_depth) {
  validate_specs(specs);
  // word -> category -> minimal depth over every spec's expansion
  std::map<std::string, std::map<std::string, int>> claims;
  for (const CategorySpec& spec : specs) {
    for (const Expansion& e : expand_seeds(spec, specs, graph, max_depth)) {
      auto [it, inserted] = claims[e.word].emplace(e.category, e.depth);
      if (!inserted) it->second = std::min(it->second, e.depth);
    }
  }

  CategoryCorpus corpus;
  for (const auto& [word, by_cat] : claims) {
    int best = std::numeric_limits<int>::max();
    for (const auto& [cat, d] : by_cat) best = std::min(best, d);
    std::vector<std::string> winners;
    for (const auto& [cat, d] : by_cat) {
      if (d == best) winners.push_back(cat);
    }
    if (winners.size() == 1) {
      corpus.entries.emplace(word, CorpusEntry{winners.front(), best});
    } else {
      corpus.conflicts.push_back({word, best, std::move(winners)});
    }
  }
  return corpus;
}

CategoryCorpus restrict_to(const CategoryCorpus& corpus,
                           const std::set<std::string>& words) {
  CategoryCorpus out;
  out.conflicts = corpus.conflicts;
  for (const auto& [w, e] : corpus.entries) {
    if (words.count(w)) out.entries.emplace(w, e);
  }
  return out;
}

std::string dump_corpus(const CategoryCorpus& corpus) {
  std::string out;
  for (const auto& [w, e] : corpus.entries) {
    out += w;
    out += '\t';
    out += e.category;
    out += '\t';
    out += std::to_string(e.depth);
    out += '\n';
  }
  return out;
}

std::string dump_conflicts(const CategoryCorpus& corpus) {
  std::string out;
  for (const Conflict& c : corpus.conflicts) {
    out += c.word + '\t' + std::to_string(c.depth) + '\t' +
           text::join(c.categories, " ") + '\n';
  }
  return out;
}

CategoryCorpus parse_corpus(std::string_view content,
                            const std::string& source) {
  CategoryCorpus corpus;
  std::size_t number = 0;
  for (std::string line : text::split(content, '\n')) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = text::split(line, '\t');
    if (f.size() != 3) {
      throw ParseError(source, number, "expected word<TAB>category<TAB>depth");
    }
    int depth = 0;
    try {
      std::size_t used = 0;
      depth = std::stoi(f[2], &used);
      if (used != f[2].size() || depth < 0) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError(source, number, "bad depth '" + f[2] + "'");
    }
    if (!corpus.entries.emplace(f[0], CorpusEntry{f[1], depth}).second) {
      throw ParseError(source, number, "word '" + f[0] + "' listed twice");
    }
  }
  return corpus;
}

std::map<std::string, int> score(const normalize::NormalizedDoc& doc,
                                 const CategoryCorpus& corpus,
                                 const std::vector<std::string>& spec_order) {
  std::map<std::string, int> scores;
  for (const std::string& c : spec_order) scores.emplace(c, 0);
  for (const std::string& tok : doc.tokens) {
    const auto it = corpus.entries.find(tok);
    if (it != corpus.entries.end()) ++scores[it->second.category];
  }
  return scores;
}

WeakLabel weak_label(const normalize::NormalizedDoc& doc,
                     const CategoryCorpus& corpus,
                     const std::vector<std::string>& spec_order) {
  WeakLabel label;
  label.doc_id = doc.id;
  label.scores = score(doc, corpus, spec_order);
  if (label.scores.size() != spec_order.size()) {
    for (const auto& [cat, s] : label.scores) {
      if (std::find(spec_order.begin(), spec_order.end(), cat) ==
          spec_order.end()) {
        throw ValidationError("corpus category '" + cat +
                              "' is missing from the category order");
      }
    }
  }
  int best = 0;
  for (const std::string& c : spec_order) {
    const int s = label.scores.at(c);
    if (s > best) {
      best = s;
      label.category = c;
    }
  }
  return label;
}

}  // namespace hca::lexicon
