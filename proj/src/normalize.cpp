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

#include "hca/normalize.hpp"

#include <algorithm>

#include "hca/error.hpp"
#include "hca/text.hpp"

namespace hca::normalize {
namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

bool is_url(std::string_view tok) {
  return starts_with(tok, "http://") || starts_with(tok, "https://") ||
         starts_with(tok, "www.");
}

bool has_notation_residue(std::string_view tok) {
  return tok.find('#') != std::string_view::npos ||
         tok.find('@') != std::string_view::npos ||
         tok.find("://") != std::string_view::npos ||
         starts_with(tok, "www.") || tok == "rt";
}

bool has_long_run(std::string_view tok) {
  const auto units = text::decode_utf8(tok);
  std::size_t run = 0;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (text::is_letter(units[i]) && i > 0 && units[i - 1].valid &&
        units[i - 1].cp == units[i].cp) {
      if (++run >= 3) return true;
    } else {
      run = text::is_letter(units[i]) ? 1 : 0;
    }
  }
  return false;
}

// Token split into literal pieces and elongated runs:
// literal[0] run[0] literal[1] run[1] ... literal[k].
struct Elongation {
  std::vector<std::string> literals;
  std::vector<std::string> run_chars;  // UTF-8 of the repeated letter
};

Elongation find_runs(std::string_view tok) {
  Elongation e;
  const auto units = text::decode_utf8(tok);
  std::string literal;
  std::size_t i = 0;
  while (i < units.size()) {
    std::size_t j = i + 1;
    if (text::is_letter(units[i])) {
      while (j < units.size() && units[j].valid && units[j].cp == units[i].cp) {
        ++j;
      }
    }
    const std::string_view unit_bytes =
        tok.substr(units[i].offset, units[i].length);
    if (j - i >= 3) {
      e.literals.push_back(std::move(literal));
      literal.clear();
      e.run_chars.emplace_back(unit_bytes);
    } else {
      for (std::size_t k = i; k < j; ++k) literal.append(unit_bytes);
    }
    i = j;
  }
  e.literals.push_back(std::move(literal));
  return e;
}

bool has_word_with_prefix(const std::set<std::string>& vocab,
                          const std::string& prefix) {
  const auto it = vocab.lower_bound(prefix);
  return it != vocab.end() && starts_with(*it, prefix);
}

// Depth-first search in candidate preference order, pruning any partial
// candidate that is not a prefix of some vocabulary word.
bool search_candidates(const Elongation& e, const std::set<std::string>& vocab,
                       std::size_t run, const std::string& prefix,
                       std::string& found) {
  if (run == e.run_chars.size()) {
    if (vocab.count(prefix)) {
      found = prefix;
      return true;
    }
    return false;
  }
  for (int keep : {2, 1}) {
    std::string next = prefix;
    for (int r = 0; r < keep; ++r) next += e.run_chars[run];
    next += e.literals[run + 1];
    if (!has_word_with_prefix(vocab, next)) continue;
    if (search_candidates(e, vocab, run + 1, next, found)) return true;
  }
  return false;
}

void check_replacement_token(const std::string& key, const std::string& tok) {
  const auto bad = [&](const std::string& why) {
    throw ValidationError("slang entry '" + key + "': replacement '" + tok +
                          "' " + why);
  };
  if (tok.empty()) bad("is empty");
  if (text::to_lower(tok) != tok) bad("is not lowercase");
  for (char c : tok) {
    if (text::is_space(c)) bad("contains whitespace");
  }
  if (has_notation_residue(tok)) bad("contains a notation marker");
  if (has_long_run(tok)) bad("contains an elongated letter run");
}

}  // namespace

void NormalizeConfig::validate() const {
  for (const char* required : {"is", "are", "am"}) {
    if (!stopwords.count(required)) {
      throw ValidationError(std::string("stop word list must contain '") +
                            required + "'");
    }
  }
  for (const auto& [key, replacement] : slang) {
    if (key.empty() || text::to_lower(key) != key) {
      throw ValidationError("slang key '" + key + "' must be lowercase");
    }
    for (const std::string& tok : replacement) {
      if (tok == key) {
        throw ValidationError("slang key '" + key + "' expands to itself");
      }
      if (slang.count(tok)) {
        throw ValidationError("slang key '" + key +
                              "' expands to another key '" + tok + "'");
      }
      check_replacement_token(key, tok);
    }
  }
  for (const std::string& w : reference_vocab) {
    if (text::to_lower(w) != w) {
      throw ValidationError("reference word '" + w + "' must be lowercase");
    }
  }
  for (const std::string& e : emoticon_patterns) {
    if (e.empty() || text::split_whitespace(e).size() != 1) {
      throw ValidationError("emoticon '" + e + "' must be a single token");
    }
  }
}

std::set<std::string> load_word_list(const std::filesystem::path& path) {
  std::set<std::string> words;
  for (const auto& line : text::read_config_lines(path)) {
    words.insert(text::to_lower(text::trim(line.text)));
  }
  return words;
}

std::map<std::string, std::vector<std::string>> load_slang(
    const std::filesystem::path& path) {
  std::map<std::string, std::vector<std::string>> slang;
  for (const auto& line : text::read_config_lines(path)) {
    const auto tab = line.text.find('\t');
    if (tab == std::string::npos) {
      throw ParseError(path.string(), line.number,
                       "expected key<TAB>replacement");
    }
    const std::string key = text::to_lower(text::trim(
        std::string_view(line.text).substr(0, tab)));
    auto words = text::split_whitespace(
        text::to_lower(std::string_view(line.text).substr(tab + 1)));
    if (key.empty() || words.empty()) {
      throw ParseError(path.string(), line.number, "empty key or replacement");
    }
    if (!slang.emplace(key, std::move(words)).second) {
      throw ParseError(path.string(), line.number,
                       "duplicate slang key '" + key + "'");
    }
  }
  return slang;
}

std::vector<std::string> load_emoticons(const std::filesystem::path& path) {
  std::vector<std::string> out;
  for (const auto& line : text::read_config_lines(path)) {
    std::string e = text::to_lower(text::trim(line.text));
    if (std::find(out.begin(), out.end(), e) == out.end()) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

NormalizeConfig load_config(const ConfigPaths& paths) {
  NormalizeConfig cfg;
  cfg.stopwords = load_word_list(paths.stopwords);
  cfg.slang = load_slang(paths.slang);
  cfg.reference_vocab = load_word_list(paths.reference_vocab);
  cfg.emoticon_patterns = load_emoticons(paths.emoticons);
  cfg.validate();
  return cfg;
}

std::string to_uniform_case(std::string_view text) {
  return text::to_lower(text);
}

std::string strip_notations(std::string_view text, const NormalizeConfig& cfg) {
  std::vector<std::string> kept;
  for (std::string& tok : text::split_whitespace(text)) {
    if (tok.front() == '#' || tok.front() == '@' || tok == "rt" ||
        is_url(tok)) {
      continue;
    }
    if (std::find(cfg.emoticon_patterns.begin(), cfg.emoticon_patterns.end(),
                  tok) != cfg.emoticon_patterns.end()) {
      continue;
    }
    kept.push_back(std::move(tok));
  }
  return text::join(kept, " ");
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (const std::string& raw : text::split_whitespace(text)) {
    std::size_t b = 0;
    std::size_t e = raw.size();
    // Bytes >= 0x80 belong to multi-byte characters and are never trimmed.
    const auto trimmable = [](char c) {
      return static_cast<unsigned char>(c) < 0x80 && !text::is_ascii_alnum(c);
    };
    // Leading '#' and '@' stay so "(@bob)" is still seen as a mention.
    while (b < e && trimmable(raw[b]) && raw[b] != '#' && raw[b] != '@') ++b;
    while (e > b && trimmable(raw[e - 1])) --e;
    if (b == e) continue;
    std::string tok = raw.substr(b, e - b);
    if (has_notation_residue(tok)) continue;
    out.push_back(std::move(tok));
  }
  return out;
}

std::vector<std::string> remove_stopwords(
    const std::vector<std::string>& tokens,
    const std::set<std::string>& stopwords) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) {
    if (!stopwords.count(t)) out.push_back(t);
  }
  return out;
}

std::string compress_elongation(std::string_view token,
                                const std::set<std::string>& reference_vocab) {
  const Elongation e = find_runs(token);
  if (e.run_chars.empty()) return std::string(token);

  std::string found;
  if (!reference_vocab.empty() &&
      has_word_with_prefix(reference_vocab, e.literals[0]) &&
      search_candidates(e, reference_vocab, 0, e.literals[0], found)) {
    return found;
  }
  std::string fallback = e.literals[0];
  for (std::size_t r = 0; r < e.run_chars.size(); ++r) {
    fallback += e.run_chars[r];
    fallback += e.literals[r + 1];
  }
  return fallback;
}

std::vector<std::string> expand_slang(
    const std::vector<std::string>& tokens,
    const std::map<std::string, std::vector<std::string>>& slang) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) {
    const auto it = slang.find(t);
    if (it == slang.end()) {
      out.push_back(t);
    } else {
      out.insert(out.end(), it->second.begin(), it->second.end());
    }
  }
  return out;
}

NormalizedDoc normalize(const ingest::TweetRecord& rec,
                        const NormalizeConfig& cfg) {
  const std::string lowered = to_uniform_case(rec.text);
  const std::string stripped = strip_notations(lowered, cfg);
  std::vector<std::string> tokens =
      remove_stopwords(tokenize(stripped), cfg.stopwords);
  for (std::string& t : tokens) t = compress_elongation(t, cfg.reference_vocab);
  // Compression can land on a stop word ("isss" -> "is").
  tokens = remove_stopwords(tokens, cfg.stopwords);
  tokens = expand_slang(tokens, cfg.slang);
  std::erase_if(tokens, [](const std::string& t) { return t.empty(); });
  return {rec.id, std::move(tokens)};
}

bool is_clean_token(std::string_view token) {
  return !token.empty() && !has_notation_residue(token) &&
         text::to_lower(token) == token && !has_long_run(token);
}

}  // namespace hca::normalize
