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

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hca/normalize.hpp"

// Knowledge-based side of the classifier: seed words grown over a synonym /
// antonym graph into disjoint per-category corpora, and corpus-hit labeling.
namespace hca::lexicon {

enum class Polarity { kProblem, kPerk };

std::string_view polarity_name(Polarity p);
Polarity parse_polarity(std::string_view s);

struct CategorySpec {
  std::string name;
  Polarity polarity = Polarity::kProblem;
  std::set<std::string> seeds;
  std::optional<std::string> counterpart;  // opposite-polarity category
};

// Names unique, seeds non-empty and lowercase, counterparts exist and have
// the opposite polarity. Throws ValidationError.
void validate_specs(const std::vector<CategorySpec>& specs);

// `name<TAB>polarity<TAB>counterpart-or-"-"<TAB>seed words`.
std::vector<CategorySpec> load_specs(const std::filesystem::path& path);
std::vector<std::string> spec_order(const std::vector<CategorySpec>& specs);

enum class EdgeKind { kSynonym, kAntonym };

// Undirected, no self-loops, at most one edge per unordered word pair.
class SynonymGraph {
 public:
  struct Neighbor {
    std::string word;
    EdgeKind kind;
  };

  // Throws ValidationError on a self-loop or on a second edge of a different
  // kind for the same pair. Repeating an identical edge is a no-op.
  void add_edge(const std::string& a, const std::string& b, EdgeKind kind);
  void add_node(const std::string& w);

  const std::set<std::string>& nodes() const { return nodes_; }
  // Neighbors in lexicographic order; empty for unknown words.
  const std::vector<Neighbor>& neighbors(const std::string& w) const;
  std::size_t edge_count() const { return edges_.size(); }

 private:
  std::set<std::string> nodes_;
  std::map<std::pair<std::string, std::string>, EdgeKind> edges_;
  std::map<std::string, std::vector<Neighbor>> adjacency_;
};

// `word1<TAB>word2<TAB>synonym|antonym`.
SynonymGraph load_graph(const std::filesystem::path& path);

struct Expansion {
  std::string word;
  std::string category;
  int depth = 0;

  bool operator==(const Expansion&) const = default;
  auto operator<=>(const Expansion&) const = default;
};

// Breadth-first traversal from spec.seeds over synonym edges, up to
// max_depth. A word at depth d with an antonym neighbor emits that neighbor
// into spec.counterpart at depth d + 1 (if a counterpart is declared and
// d + 1 <= max_depth) without traversing through it. Each (word, category)
// pair is reported once, at its minimal depth, sorted.
std::vector<Expansion> expand_seeds(const CategorySpec& spec,
                                    const std::vector<CategorySpec>& specs,
                                    const SynonymGraph& graph, int max_depth);

struct CorpusEntry {
  std::string category;
  int depth = 0;

  bool operator==(const CorpusEntry&) const = default;
};

struct Conflict {
  std::string word;
  int depth = 0;
  std::vector<std::string> categories;  // tied claimants, sorted

  bool operator==(const Conflict&) const = default;
};

struct CategoryCorpus {
  std::map<std::string, CorpusEntry> entries;
  std::vector<Conflict> conflicts;  // sorted by word
};

// Unions every spec's expansion; smallest depth wins, ties across categories
// exclude the word and record a conflict.
CategoryCorpus build_corpus(const std::vector<CategorySpec>& specs,
                            const SynonymGraph& graph, int max_depth);

// Drops corpus entries whose word is not in `words`.
CategoryCorpus restrict_to(const CategoryCorpus& corpus,
                           const std::set<std::string>& words);

// `word<TAB>category<TAB>depth`, sorted by word.
std::string dump_corpus(const CategoryCorpus& corpus);
std::string dump_conflicts(const CategoryCorpus& corpus);
CategoryCorpus parse_corpus(std::string_view content, const std::string& source);

// Hits per category, in spec order; every category of spec_order is present.
std::map<std::string, int> score(const normalize::NormalizedDoc& doc,
                                 const CategoryCorpus& corpus,
                                 const std::vector<std::string>& spec_order);

struct WeakLabel {
  std::string doc_id;
  std::optional<std::string> category;  // nullopt means Unlabeled
  std::map<std::string, int> scores;

  bool operator==(const WeakLabel&) const = default;
};

// Argmax of score(); ties go to the category listed first in spec_order; an
// all-zero score leaves the document unlabeled. Throws ValidationError when the
// document hits a corpus category missing from spec_order.
WeakLabel weak_label(const normalize::NormalizedDoc& doc,
                     const CategoryCorpus& corpus,
                     const std::vector<std::string>& spec_order);

}  // namespace hca::lexicon
