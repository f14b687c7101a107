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

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

// Small text and file utilities shared by every module.
namespace hca::text {

// One decoded UTF-8 sequence. Invalid bytes decode as single-byte units with
// valid == false and are passed through untouched by every transformation.
struct CodeUnit {
  char32_t cp = 0;
  std::size_t offset = 0;
  std::size_t length = 0;
  bool valid = true;
};

std::vector<CodeUnit> decode_utf8(std::string_view s);
void append_utf8(std::string& out, char32_t cp);
std::size_t count_code_points(std::string_view s);

// Simple (1:1) lowercase mapping covering ASCII, Latin-1, Latin Extended-A,
// Greek and Cyrillic. Other code points are returned unchanged.
char32_t to_lower(char32_t cp);
std::string to_lower(std::string_view s);

// Letters for elongation purposes: ASCII letters and decoded code points in
// the alphabetic blocks handled by to_lower (plus anything above U+024F that
// is not punctuation or a symbol block we know about).
bool is_letter(const CodeUnit& u);

bool is_ascii_alnum(char c);
bool is_space(char c);

std::vector<std::string> split_whitespace(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string_view trim(std::string_view s);

// Reads the whole file. Throws IoError naming the path.
std::string read_file(const std::filesystem::path& path);
// Writes atomically (temp file + rename). Throws IoError naming the path.
void write_file(const std::filesystem::path& path, std::string_view content);

// A non-empty, non-comment line of a configuration file.
struct ConfigLine {
  std::size_t number = 0;  // 1-based
  std::string text;
};

// Lines of a UTF-8 config file, skipping blank lines and lines whose first
// non-space character is '#'. Trailing '\r' is removed.
std::vector<ConfigLine> read_config_lines(const std::filesystem::path& path);

// 17 significant digits; round-trips every finite double. Infinities are
// written as "inf" / "-inf".
std::string format_real(double v);
// Inverse of format_real. Throws ValidationError on garbage.
double parse_real(std::string_view s);

}  // namespace hca::text
