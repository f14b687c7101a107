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

#include "hca/features.hpp"

#include <map>

#include "hca/error.hpp"
#include "hca/text.hpp"

namespace hca::features {

Vocabulary::Vocabulary(std::vector<std::string> words)
    : words_(std::move(words)) {
  index_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i > 0 && !(words_[i - 1] < words_[i])) {
      throw ValidationError("vocabulary words must be unique and sorted ('" +
                            words_[i - 1] + "', '" + words_[i] + "')");
    }
    index_.emplace(words_[i], static_cast<std::uint32_t>(i));
  }
}

std::int64_t Vocabulary::index_of(std::string_view word) const {
  const auto it = index_.find(std::string(word));
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::uint64_t FeatureVector::total() const {
  std::uint64_t n = 0;
  for (const auto& [i, c] : counts) n += c;
  return n;
}

Vocabulary fit_vocabulary(const std::vector<normalize::NormalizedDoc>& docs,
                          std::uint32_t min_count) {
  if (docs.empty()) {
    throw ValidationError("cannot fit a vocabulary on zero documents");
  }
  if (min_count == 0) throw ValidationError("min_count must be positive");
  std::map<std::string, std::uint64_t> freq;
  for (const auto& d : docs) {
    for (const std::string& t : d.tokens) ++freq[t];
  }
  std::vector<std::string> words;
  for (const auto& [w, n] : freq) {
    if (n >= min_count) words.push_back(w);
  }
  if (words.empty()) {
    throw ValidationError("vocabulary is empty (min_count " +
                          std::to_string(min_count) + ")");
  }
  return Vocabulary(std::move(words));
}

FeatureVector vectorize(const normalize::NormalizedDoc& doc,
                        const Vocabulary& vocab) {
  std::map<std::uint32_t, std::uint32_t> counts;
  for (const std::string& t : doc.tokens) {
    const std::int64_t i = vocab.index_of(t);
    if (i >= 0) ++counts[static_cast<std::uint32_t>(i)];
  }
  return {doc.id, {counts.begin(), counts.end()}};
}

std::string dump_vocabulary(const Vocabulary& vocab) {
  std::string out;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    out += vocab.word(i);
    out += '\t';
    out += std::to_string(i);
    out += '\n';
  }
  return out;
}

Vocabulary parse_vocabulary(std::string_view content,
                            const std::string& source) {
  std::vector<std::string> words;
  std::size_t number = 0;
  for (std::string line : text::split(content, '\n')) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = text::split(line, '\t');
    if (f.size() != 2 || f[1] != std::to_string(words.size())) {
      throw ParseError(source, number,
                       "expected word<TAB>" + std::to_string(words.size()));
    }
    words.push_back(f[0]);
  }
  try {
    return Vocabulary(std::move(words));
  } catch (const ValidationError& e) {
    throw ValidationError(source + ": " + e.what());
  }
}

}  // namespace hca::features
