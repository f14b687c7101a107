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
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hca/normalize.hpp"

namespace hca::features {

// Frozen word -> index map. Indices follow lexicographic word order.
class Vocabulary {
 public:
  Vocabulary() = default;
  // `words` must be strictly increasing; throws ValidationError otherwise.
  explicit Vocabulary(std::vector<std::string> words);

  std::size_t size() const { return words_.size(); }
  // Index of `word`, or -1 when out of vocabulary.
  std::int64_t index_of(std::string_view word) const;
  const std::string& word(std::size_t index) const { return words_.at(index); }
  const std::vector<std::string>& words() const { return words_; }

  bool operator==(const Vocabulary& o) const { return words_ == o.words_; }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

// Sparse term counts, sorted by index, every count >= 1.
struct FeatureVector {
  std::string doc_id;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> counts;

  std::uint64_t total() const;
  bool operator==(const FeatureVector&) const = default;
};

// Words whose total count across `docs` is at least min_count. Throws
// ValidationError for empty input or an empty resulting vocabulary.
Vocabulary fit_vocabulary(const std::vector<normalize::NormalizedDoc>& docs,
                          std::uint32_t min_count);

// Out-of-vocabulary tokens are dropped.
FeatureVector vectorize(const normalize::NormalizedDoc& doc,
                        const Vocabulary& vocab);

// `word<TAB>index` per line, lexicographic.
std::string dump_vocabulary(const Vocabulary& vocab);
Vocabulary parse_vocabulary(std::string_view content, const std::string& source);

}  // namespace hca::features
