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

#include <string>
#include <vector>

#include "hca/classify.hpp"
#include "hca/features.hpp"

namespace hca::testing {

// Labeled set built through the real vocabulary and vectorizer.
inline classify::LabeledSet labeled_from_tokens(
    const std::vector<std::vector<std::string>>& docs,
    const std::vector<std::size_t>& labels, std::size_t m,
    features::Vocabulary* vocab_out = nullptr) {
  std::vector<normalize::NormalizedDoc> nd;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    nd.push_back({"d" + std::to_string(i), docs[i]});
  }
  features::Vocabulary vocab = features::fit_vocabulary(nd, 1);
  classify::LabeledSet set;
  for (const auto& d : nd) {
    set.vectors.push_back(
        classify::SparseVector::from_counts(features::vectorize(d, vocab)));
  }
  set.labels = labels;
  for (std::size_t c = 0; c < m; ++c) set.category_names.push_back("c" + std::to_string(c));
  set.dim = vocab.size();
  if (vocab_out) *vocab_out = std::move(vocab);
  return set;
}

// Dense rows to sparse vectors, zeros omitted.
inline classify::SparseVector sparse(const std::vector<double>& dense) {
  classify::SparseVector x;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) x.entries.push_back({static_cast<std::uint32_t>(i), dense[i]});
  }
  return x;
}

}  // namespace hca::testing
