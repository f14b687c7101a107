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

// Synthetic corpus with a known answer: six categories, each owning a pool of
// invented words that are reachable from its seeds within two synonym hops.
// Every tweet mixes words of one pool with shared noise words, so the
// category that produced it is the gold label.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hca/pipeline.hpp"

namespace hca::testing {

struct PlantedOptions {
  std::size_t tweets_per_category = 200;
  std::size_t pool_size = 30;
  std::size_t noise_words = 30;
  // Noise words linked into two categories at equal depth, which the corpus
  // builder must exclude as conflicts.
  std::size_t conflict_words = 4;
  std::uint64_t seed = 7;
};

struct PlantedCorpus {
  std::vector<std::string> categories;
  std::vector<std::vector<std::string>> pools;  // per category
  std::vector<std::string> noise;
  std::vector<std::string> conflict_words;
  pipeline::RunConfig config;  // inputs inside `dir`, output in dir/out
};

// Writes dataset.jsonl, categories.tsv and synonyms.tsv into `dir` and
// points the normalization files at the shipped data directory.
PlantedCorpus write_planted_corpus(const std::filesystem::path& dir,
                                   const PlantedOptions& opt = {});

// Directory holding the shipped stop word, slang, vocabulary and emoticon
// files.
std::filesystem::path shipped_data_dir();

// Fresh empty directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& name);

}  // namespace hca::testing
