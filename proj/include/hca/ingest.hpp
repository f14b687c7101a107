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
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hca::ingest {

inline constexpr std::size_t kMaxTextCodePoints = 280;

// One raw post.
struct TweetRecord {
  std::string id;
  std::string text;
  std::vector<std::string> hashtags;  // lowercase, without '#'
  std::optional<std::string> label;   // gold category, evaluation only

  bool operator==(const TweetRecord&) const = default;
};

struct Dataset {
  std::vector<TweetRecord> records;  // file order
  std::string source_path;
};

enum class Format { kJsonl, kCsv };

Format parse_format(std::string_view name);

// '#'-prefixed maximal runs of letters, digits and '_' in `text`, lowercased,
// in order of appearance, without duplicates.
std::vector<std::string> extract_hashtags(std::string_view text);

// Checks the TweetRecord invariants; throws ValidationError.
void validate_record(const TweetRecord& rec);

Dataset parse_jsonl(std::string_view content, const std::string& source);
Dataset parse_csv(std::string_view content, const std::string& source);

// Throws IoError (unreadable), ParseError (bad line, with 1-based line number)
// or ValidationError (duplicate id, text too long).
Dataset read_dataset(const std::filesystem::path& path, Format format);

// Keeps records whose hashtags intersect `wanted`, preserving order.
Dataset filter_by_hashtags(const Dataset& ds,
                           const std::set<std::string>& wanted);

// Deterministic shuffle keyed by seed; |test| = round(test_fraction * n).
std::pair<Dataset, Dataset> split(const Dataset& ds, double test_fraction,
                                  std::uint64_t seed);

// Record order used by split(): a seeded Fisher-Yates permutation of [0, n).
std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed);

// One jsonl line per record, same field layout read_dataset accepts.
std::string to_jsonl(const Dataset& ds);

}  // namespace hca::ingest
