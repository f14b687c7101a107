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
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hca/ingest.hpp"

// Text normalization: casing, notation stripping, stop words, elongation and
// slang. The pipeline order is fixed; see normalize().
namespace hca::normalize {

struct NormalizeConfig {
  std::set<std::string> stopwords;
  std::map<std::string, std::vector<std::string>> slang;
  // Ordered so elongation candidates can be pruned by prefix.
  std::set<std::string> reference_vocab;
  // Lowercased literals, matched against whole tokens.
  std::vector<std::string> emoticon_patterns;

  // Throws ValidationError when an invariant fails:
  //  - stopwords contain "is", "are" and "am";
  //  - slang keys are lowercase and never expand to themselves or to another
  //    key, so a single pass terminates;
  //  - replacement tokens are lowercase, non-empty, free of whitespace and
  //    notation markers, and have no run of 3+ identical letters.
  void validate() const;
};

struct ConfigPaths {
  std::filesystem::path stopwords;
  std::filesystem::path slang;
  std::filesystem::path reference_vocab;
  std::filesystem::path emoticons;
};

std::set<std::string> load_word_list(const std::filesystem::path& path);
std::map<std::string, std::vector<std::string>> load_slang(
    const std::filesystem::path& path);
std::vector<std::string> load_emoticons(const std::filesystem::path& path);

// Loads and validates all four files.
NormalizeConfig load_config(const ConfigPaths& paths);

struct NormalizedDoc {
  std::string id;
  std::vector<std::string> tokens;

  bool operator==(const NormalizedDoc&) const = default;
};

std::string to_uniform_case(std::string_view text);

// Drops whole whitespace-delimited tokens that are hashtags, mentions, "rt",
// URLs or exact emoticons; survivors are re-joined by single spaces.
std::string strip_notations(std::string_view text, const NormalizeConfig& cfg);

// Whitespace split, then leading/trailing ASCII punctuation trimmed from each
// token (internal characters such as apostrophes are kept). Tokens that still
// carry notation residue after trimming ("(@bob)", "rt:", "<http://x>") are
// dropped, as are tokens that trim to nothing.
std::vector<std::string> tokenize(std::string_view text);

std::vector<std::string> remove_stopwords(
    const std::vector<std::string>& tokens,
    const std::set<std::string>& stopwords);

// Resolves every maximal run of >= 3 identical letters. Candidates shorten
// each run to 2 then 1, enumerated left to right in that preference order;
// the first candidate found in reference_vocab wins, otherwise every run is
// cut to a single letter.
std::string compress_elongation(std::string_view token,
                                const std::set<std::string>& reference_vocab);

std::vector<std::string> expand_slang(
    const std::vector<std::string>& tokens,
    const std::map<std::string, std::vector<std::string>>& slang);

NormalizedDoc normalize(const ingest::TweetRecord& rec,
                        const NormalizeConfig& cfg);

// True when `token` satisfies every per-token NormalizedDoc invariant
// (stop words aside, which depend on the config).
bool is_clean_token(std::string_view token);

}  // namespace hca::normalize
