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

#include "hca/text.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "hca/error.hpp"
#include "planted.hpp"

namespace hca::text {
namespace {

TEST(Utf8, DecodesMultiByteAndFlagsInvalidBytes) {
  const auto units = decode_utf8("a\xc3\xa9\xff");
  ASSERT_EQ(units.size(), 3u);
  EXPECT_EQ(units[0].cp, U'a');
  EXPECT_EQ(units[1].cp, U'é');
  EXPECT_EQ(units[1].length, 2u);
  EXPECT_FALSE(units[2].valid);
  EXPECT_EQ(count_code_points("\xce\x94x"), 2u);
}

TEST(Utf8, LowercaseCoversNonAscii) {
  EXPECT_EQ(to_lower("HAPPY \xc3\x89t\xc3\xa9 \xce\x94 \xd0\x96"),
            "happy \xc3\xa9t\xc3\xa9 \xce\xb4 \xd0\xb6");
  EXPECT_EQ(to_lower("g8"), "g8");
  // Invalid bytes pass through untouched.
  EXPECT_EQ(to_lower("A\xffZ"), "a\xffz");
}

TEST(Strings, SplitJoinTrim) {
  EXPECT_EQ(split_whitespace("  a \t b\nc  "), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(split("a\t\tb", '\t'), (std::vector<std::string>{"a", "", "b"}));
  EXPECT_EQ(join({"x", "y"}, "-"), "x-y");
  EXPECT_EQ(trim("  x y \r"), "x y");
}

TEST(Reals, FormatRoundTrips) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng) / 7.0;
    EXPECT_EQ(parse_real(format_real(v)), v);
  }
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(format_real(-inf), "-inf");
  EXPECT_EQ(parse_real("-inf"), -inf);
  EXPECT_THROW(parse_real("1.5x"), ValidationError);
  EXPECT_THROW(parse_real(""), ValidationError);
}

TEST(Files, MissingFileNamesPath) {
  try {
    read_file("/nonexistent/hca/file.txt");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/hca/file.txt"),
              std::string::npos);
  }
}

TEST(Files, ConfigLinesSkipCommentsAndBlanks) {
  const auto dir = testing::scratch_dir("text-config");
  write_file(dir / "c.txt", "# header\n\nalpha\r\n  # indented\nbeta\n");
  const auto lines = read_config_lines(dir / "c.txt");
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].text, "alpha");
  EXPECT_EQ(lines[0].number, 3u);
  EXPECT_EQ(lines[1].number, 5u);
}

}  // namespace
}  // namespace hca::text
