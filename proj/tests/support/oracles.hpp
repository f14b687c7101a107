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

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the code paths being checked.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace hca::testing {

// ---------------------------------------------------------------------------
// Naive Bayes in exact rational arithmetic.

struct NbCorpus {
  std::vector<std::vector<std::string>> docs;  // training token lists
  std::vector<std::size_t> labels;
  std::size_t num_classes = 0;
  std::vector<std::string> query;              // document to classify
};

// Posterior of every class computed from raw token counts with exact
// rationals, then converted to double. nullopt when every class has zero
// probability. Tokens of `query` unseen in training are ignored.
std::optional<std::vector<double>> nb_posterior_oracle(const NbCorpus& corpus,
                                                       unsigned smoothing);

// Random corpus: <= 5 docs, <= 10 distinct words, 2-3 classes, every class
// has at least one non-empty document.
NbCorpus random_nb_corpus(std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Lexicon expansion by exhaustive all-pairs shortest paths.

struct Edge {
  std::string a;
  std::string b;
  bool antonym = false;
};

struct SpecLite {
  std::string name;
  bool perk = false;
  std::set<std::string> seeds;
  std::optional<std::string> counterpart;
};

// (word, category) -> depth produced by one spec, derived from Floyd-Warshall
// distances over synonym edges.
std::map<std::pair<std::string, std::string>, int> expansion_oracle(
    const SpecLite& spec, const std::set<std::string>& nodes,
    const std::vector<Edge>& edges, int max_depth);

struct CorpusOracle {
  std::map<std::string, std::pair<std::string, int>> entries;
  std::set<std::string> conflicts;
};

CorpusOracle corpus_oracle(const std::vector<SpecLite>& specs,
                           const std::set<std::string>& nodes,
                           const std::vector<Edge>& edges, int max_depth);

struct RandomLexicon {
  std::set<std::string> nodes;
  std::vector<Edge> edges;
  std::vector<SpecLite> specs;
  int max_depth = 2;
};

// Graph of <= 12 nodes with random synonym/antonym edges and 2-3 specs.
RandomLexicon random_lexicon(std::mt19937_64& rng);

// Uniform integer in [lo, hi] drawn without implementation-defined
// distributions.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

}  // namespace hca::testing
