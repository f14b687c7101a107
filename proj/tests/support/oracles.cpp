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

#include "oracles.hpp"

#include <algorithm>
#include <gmpxx.h>
#include <limits>

namespace hca::testing {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return lo + v % span;
}

std::optional<std::vector<double>> nb_posterior_oracle(const NbCorpus& corpus,
                                                       unsigned smoothing) {
  const std::size_t m = corpus.num_classes;
  std::set<std::string> vocab;
  for (const auto& d : corpus.docs) vocab.insert(d.begin(), d.end());
  const auto V = static_cast<unsigned long>(vocab.size());

  std::vector<std::map<std::string, unsigned long>> count(m);
  std::vector<unsigned long> total(m, 0), docs(m, 0);
  for (std::size_t j = 0; j < corpus.docs.size(); ++j) {
    const std::size_t c = corpus.labels[j];
    ++docs[c];
    for (const auto& w : corpus.docs[j]) {
      ++count[c][w];
      ++total[c];
    }
  }

  std::vector<mpq_class> joint(m);
  mpq_class evidence = 0;
  for (std::size_t c = 0; c < m; ++c) {
    mpq_class p(docs[c], corpus.docs.size());
    p.canonicalize();
    for (const auto& w : corpus.query) {
      if (!vocab.count(w)) continue;
      const unsigned long cw = count[c].count(w) ? count[c].at(w) : 0;
      mpq_class lik(cw + smoothing, total[c] + smoothing * V);
      lik.canonicalize();
      p *= lik;
    }
    joint[c] = p;
    evidence += p;
  }
  if (evidence == 0) return std::nullopt;
  std::vector<double> post(m);
  for (std::size_t c = 0; c < m; ++c) {
    mpq_class q = joint[c] / evidence;
    post[c] = q.get_d();
  }
  return post;
}

NbCorpus random_nb_corpus(std::mt19937_64& rng) {
  static const char* kWords[] = {"exam", "fail", "pizza", "free", "lab",
                                 "sleep", "job", "fun", "test", "due"};
  NbCorpus c;
  c.num_classes = draw(rng, 2, 3);
  const std::size_t vocab_size = draw(rng, 2, 10);
  const std::size_t n_docs = draw(rng, c.num_classes, 5);
  for (std::size_t j = 0; j < n_docs; ++j) {
    std::vector<std::string> doc;
    const std::size_t len = draw(rng, 1, 6);
    for (std::size_t k = 0; k < len; ++k) {
      doc.push_back(kWords[draw(rng, 0, vocab_size - 1)]);
    }
    c.docs.push_back(std::move(doc));
    // The first m documents cover every class once.
    c.labels.push_back(j < c.num_classes ? j : draw(rng, 0, c.num_classes - 1));
  }
  const std::size_t qlen = draw(rng, 0, 6);
  for (std::size_t k = 0; k < qlen; ++k) {
    c.query.push_back(kWords[draw(rng, 0, 9)]);
  }
  return c;
}

std::map<std::pair<std::string, std::string>, int> expansion_oracle(
    const SpecLite& spec, const std::set<std::string>& nodes,
    const std::vector<Edge>& edges, int max_depth) {
  std::set<std::string> all = nodes;
  all.insert(spec.seeds.begin(), spec.seeds.end());
  std::vector<std::string> words(all.begin(), all.end());
  const std::size_t n = words.size();
  const auto index = [&](const std::string& w) {
    return static_cast<std::size_t>(
        std::lower_bound(words.begin(), words.end(), w) - words.begin());
  };
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) dist[i][i] = 0;
  for (const Edge& e : edges) {
    if (e.antonym) continue;
    dist[index(e.a)][index(e.b)] = 1;
    dist[index(e.b)][index(e.a)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }

  std::vector<int> depth(n, kInf);
  for (const auto& s : spec.seeds) {
    const std::size_t si = index(s);
    for (std::size_t j = 0; j < n; ++j) depth[j] = std::min(depth[j], dist[si][j]);
  }

  std::map<std::pair<std::string, std::string>, int> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (depth[j] <= max_depth) out[{words[j], spec.name}] = depth[j];
  }
  if (spec.counterpart) {
    for (const Edge& e : edges) {
      if (!e.antonym) continue;
      for (int side = 0; side < 2; ++side) {
        const std::string& from = side == 0 ? e.a : e.b;
        const std::string& to = side == 0 ? e.b : e.a;
        const int d = depth[index(from)];
        if (d >= max_depth) continue;
        const auto key = std::make_pair(to, *spec.counterpart);
        const auto it = out.find(key);
        if (it == out.end() || it->second > d + 1) out[key] = d + 1;
      }
    }
  }
  return out;
}

CorpusOracle corpus_oracle(const std::vector<SpecLite>& specs,
                           const std::set<std::string>& nodes,
                           const std::vector<Edge>& edges, int max_depth) {
  std::map<std::string, std::map<std::string, int>> claims;
  for (const SpecLite& s : specs) {
    for (const auto& [key, d] : expansion_oracle(s, nodes, edges, max_depth)) {
      auto& slot = claims[key.first];
      const auto it = slot.find(key.second);
      if (it == slot.end() || it->second > d) slot[key.second] = d;
    }
  }
  CorpusOracle out;
  for (const auto& [word, by_cat] : claims) {
    int best = std::numeric_limits<int>::max();
    for (const auto& [c, d] : by_cat) best = std::min(best, d);
    std::vector<std::string> winners;
    for (const auto& [c, d] : by_cat) {
      if (d == best) winners.push_back(c);
    }
    if (winners.size() == 1) {
      out.entries[word] = {winners.front(), best};
    } else {
      out.conflicts.insert(word);
    }
  }
  return out;
}

RandomLexicon random_lexicon(std::mt19937_64& rng) {
  RandomLexicon lex;
  const std::size_t n = draw(rng, 2, 12);
  std::vector<std::string> words;
  for (std::size_t i = 0; i < n; ++i) {
    words.push_back("w" + std::to_string(i));
    lex.nodes.insert(words.back());
  }
  std::set<std::pair<std::size_t, std::size_t>> used;
  const std::size_t n_edges = draw(rng, 0, n * 2);
  for (std::size_t k = 0; k < n_edges; ++k) {
    std::size_t a = draw(rng, 0, n - 1), b = draw(rng, 0, n - 1);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (!used.insert({a, b}).second) continue;
    lex.edges.push_back({words[a], words[b], draw(rng, 0, 3) == 0});
  }
  const std::size_t n_specs = draw(rng, 2, 3);
  for (std::size_t s = 0; s < n_specs; ++s) {
    SpecLite spec;
    spec.name = "c" + std::to_string(s);
    spec.perk = s == 1;
    const std::size_t n_seeds = draw(rng, 1, 2);
    for (std::size_t k = 0; k < n_seeds; ++k) {
      spec.seeds.insert(words[draw(rng, 0, n - 1)]);
    }
    lex.specs.push_back(std::move(spec));
  }
  // c0 (problem) and c1 (perk) may point at each other.
  if (draw(rng, 0, 1)) lex.specs[0].counterpart = "c1";
  if (draw(rng, 0, 1)) lex.specs[1].counterpart = "c0";
  lex.max_depth = static_cast<int>(draw(rng, 0, 4));
  return lex;
}

}  // namespace hca::testing
