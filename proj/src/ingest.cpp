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

#include "hca/ingest.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <unordered_set>

#include "hca/error.hpp"
#include "hca/text.hpp"
#include "json.hpp"

namespace hca::ingest {
namespace {

using nlohmann::json;

bool is_tag_char(char c) { return text::is_ascii_alnum(c) || c == '_'; }

std::string normalize_tag(std::string_view raw) {
  std::string_view t = text::trim(raw);
  if (!t.empty() && t.front() == '#') t.remove_prefix(1);
  return text::to_lower(t);
}

void finish_record(TweetRecord& rec, bool has_tag_field) {
  if (!has_tag_field || rec.hashtags.empty()) {
    rec.hashtags = extract_hashtags(rec.text);
  }
}

void check_unique_ids(const Dataset& ds) {
  std::unordered_set<std::string> seen;
  for (const TweetRecord& r : ds.records) {
    if (!seen.insert(r.id).second) {
      throw ValidationError(ds.source_path + ": duplicate id '" + r.id + "'");
    }
  }
}

// RFC 4180 records: quoted fields may contain separators, quotes ("") and
// newlines. Returns rows paired with the line number each row starts on.
std::vector<std::pair<std::size_t, std::vector<std::string>>> csv_rows(
    std::string_view content, const std::string& source) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_quoted = false;
  bool row_has_data = false;
  std::size_t line = 1;
  std::size_t row_line = 1;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_quoted = false;
  };
  auto end_row = [&] {
    end_field();
    if (row_has_data || row.size() > 1 || !row.front().empty()) {
      rows.emplace_back(row_line, std::move(row));
    }
    row.clear();
    row_has_data = false;
  };

  for (std::size_t i = 0; i < content.size(); ++i) {
    const char c = content[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_quoted) {
          throw ParseError(source, line, "unexpected quote inside field");
        }
        in_quotes = true;
        field_quoted = true;
        row_has_data = true;
        break;
      case ',':
        end_field();
        row_has_data = true;
        break;
      case '\r':
        if (i + 1 < content.size() && content[i + 1] == '\n') break;
        field.push_back(c);
        break;
      case '\n':
        end_row();
        ++line;
        row_line = line;
        break;
      default:
        if (field_quoted) {
          throw ParseError(source, line, "text after closing quote");
        }
        field.push_back(c);
        row_has_data = true;
    }
  }
  if (in_quotes) throw ParseError(source, row_line, "unterminated quote");
  if (row_has_data || !field.empty()) end_row();
  return rows;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "jsonl") return Format::kJsonl;
  if (name == "csv") return Format::kCsv;
  throw ValidationError("unknown dataset format '" + std::string(name) +
                        "' (expected jsonl or csv)");
}

std::vector<std::string> extract_hashtags(std::string_view s) {
  std::vector<std::string> tags;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '#') continue;
    std::size_t j = i + 1;
    while (j < s.size() && is_tag_char(s[j])) ++j;
    if (j > i + 1) {
      std::string tag = text::to_lower(s.substr(i + 1, j - i - 1));
      bool dup = false;
      for (const auto& t : tags) dup = dup || t == tag;
      if (!dup) tags.push_back(std::move(tag));
    }
    i = j - 1;
  }
  return tags;
}

void validate_record(const TweetRecord& rec) {
  if (rec.id.empty()) throw ValidationError("record with empty id");
  const std::size_t n = text::count_code_points(rec.text);
  if (n > kMaxTextCodePoints) {
    throw ValidationError("record '" + rec.id + "': text has " +
                          std::to_string(n) + " code points (limit " +
                          std::to_string(kMaxTextCodePoints) + ")");
  }
  for (const std::string& tag : rec.hashtags) {
    if (tag.empty() || tag.find('#') != std::string::npos ||
        text::to_lower(tag) != tag) {
      throw ValidationError("record '" + rec.id + "': invalid hashtag '" +
                            tag + "'");
    }
  }
}

Dataset parse_jsonl(std::string_view content, const std::string& source) {
  Dataset ds;
  ds.source_path = source;
  std::size_t number = 0;
  for (const std::string& line : text::split(content, '\n')) {
    ++number;
    if (text::trim(line).empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(source, number, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) throw ParseError(source, number, "expected an object");

    TweetRecord rec;
    const auto id = obj.find("id");
    if (id == obj.end() || !id->is_string()) {
      throw ParseError(source, number, "missing string field 'id'");
    }
    rec.id = id->get<std::string>();
    const auto txt = obj.find("text");
    if (txt == obj.end() || !txt->is_string()) {
      throw ParseError(source, number, "missing string field 'text'");
    }
    rec.text = txt->get<std::string>();

    bool has_tags = false;
    if (const auto tags = obj.find("hashtags"); tags != obj.end()) {
      if (!tags->is_array()) {
        throw ParseError(source, number, "'hashtags' must be an array");
      }
      has_tags = true;
      for (const json& t : *tags) {
        if (!t.is_string()) {
          throw ParseError(source, number, "'hashtags' entries must be strings");
        }
        rec.hashtags.push_back(normalize_tag(t.get<std::string>()));
      }
    }
    if (const auto label = obj.find("label");
        label != obj.end() && !label->is_null()) {
      if (!label->is_string()) {
        throw ParseError(source, number, "'label' must be a string or null");
      }
      rec.label = label->get<std::string>();
    }
    finish_record(rec, has_tags);
    try {
      validate_record(rec);
    } catch (const ValidationError& e) {
      throw ParseError(source, number, e.what());
    }
    ds.records.push_back(std::move(rec));
  }
  check_unique_ids(ds);
  return ds;
}

Dataset parse_csv(std::string_view content, const std::string& source) {
  Dataset ds;
  ds.source_path = source;
  auto rows = csv_rows(content, source);
  if (rows.empty()) return ds;

  const auto& header = rows.front().second;
  int id_col = -1, text_col = -1, tags_col = -1, label_col = -1;
  for (std::size_t c = 0; c < header.size(); ++c) {
    const std::string_view h = text::trim(header[c]);
    const int ci = static_cast<int>(c);
    if (h == "id") id_col = ci;
    else if (h == "text") text_col = ci;
    else if (h == "hashtags") tags_col = ci;
    else if (h == "label") label_col = ci;
  }
  if (id_col < 0 || text_col < 0) {
    throw ParseError(source, rows.front().first,
                     "header must contain 'id' and 'text' columns");
  }

  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& [number, fields] = rows[r];
    if (fields.size() != header.size()) {
      throw ParseError(source, number,
                       "expected " + std::to_string(header.size()) +
                           " fields, found " + std::to_string(fields.size()));
    }
    TweetRecord rec;
    rec.id = fields[id_col];
    rec.text = fields[text_col];
    if (tags_col >= 0) {
      for (const std::string& t : text::split(fields[tags_col], ';')) {
        if (!text::trim(t).empty()) rec.hashtags.push_back(normalize_tag(t));
      }
    }
    if (label_col >= 0 && !fields[label_col].empty()) {
      rec.label = fields[label_col];
    }
    finish_record(rec, tags_col >= 0);
    try {
      validate_record(rec);
    } catch (const ValidationError& e) {
      throw ParseError(source, number, e.what());
    }
    ds.records.push_back(std::move(rec));
  }
  check_unique_ids(ds);
  return ds;
}

Dataset read_dataset(const std::filesystem::path& path, Format format) {
  const std::string content = text::read_file(path);
  return format == Format::kJsonl ? parse_jsonl(content, path.string())
                                  : parse_csv(content, path.string());
}

Dataset filter_by_hashtags(const Dataset& ds,
                           const std::set<std::string>& wanted) {
  if (wanted.empty()) {
    throw ValidationError("hashtag filter needs at least one hashtag");
  }
  Dataset out;
  out.source_path = ds.source_path;
  for (const TweetRecord& r : ds.records) {
    for (const std::string& t : r.hashtags) {
      if (wanted.count(t)) {
        out.records.push_back(r);
        break;
      }
    }
  }
  return out;
}

std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  // std::shuffle and uniform_int_distribution are implementation-defined;
  // draw bounded integers by rejection so the permutation is portable.
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::uint64_t bound = i;
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
      draw = rng();
    } while (draw >= limit);
    std::swap(idx[i - 1], idx[static_cast<std::size_t>(draw % bound)]);
  }
  return idx;
}

std::pair<Dataset, Dataset> split(const Dataset& ds, double test_fraction,
                                  std::uint64_t seed) {
  const std::size_t n = ds.records.size();
  if (n < 2) {
    throw ValidationError("split needs at least 2 records, got " +
                          std::to_string(n));
  }
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw ValidationError("test fraction must lie in (0, 1)");
  }
  const auto n_test =
      static_cast<std::size_t>(std::llround(test_fraction * double(n)));
  const std::vector<std::size_t> order = shuffled_indices(n, seed);

  std::pair<Dataset, Dataset> out;
  auto& [train, test] = out;
  train.source_path = test.source_path = ds.source_path;
  for (std::size_t k = 0; k < n; ++k) {
    (k < n_test ? test : train).records.push_back(ds.records[order[k]]);
  }
  return out;
}

std::string to_jsonl(const Dataset& ds) {
  std::string out;
  for (const TweetRecord& r : ds.records) {
    nlohmann::ordered_json obj;
    obj["id"] = r.id;
    obj["text"] = r.text;
    obj["hashtags"] = r.hashtags;
    if (r.label) obj["label"] = *r.label;
    out += obj.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

}  // namespace hca::ingest
