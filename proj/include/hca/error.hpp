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

#include <stdexcept>
#include <string>

namespace hca {

// Base of every error thrown by the library. The category decides the CLI
// exit code.
class Error : public std::runtime_error {
 public:
  enum class Kind { kValidation, kIo, kDivergence, kPipeline };

  Error(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

  // 2 validation, 3 I/O, 4 divergence or pipeline.
  int exit_code() const;

 private:
  Kind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(Kind::kValidation, what) {}
};

// Malformed input line/row. Reported as a validation failure.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& detail)
      : ValidationError(source + ":" + std::to_string(line) + ": " + detail),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(Kind::kIo, what) {}
};

class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, int epoch)
      : Error(Kind::kDivergence, what), epoch_(epoch) {}

  int epoch() const { return epoch_; }

 private:
  int epoch_;
};

class PipelineError : public Error {
 public:
  explicit PipelineError(const std::string& what)
      : Error(Kind::kPipeline, what) {}
};

// Every class scored -inf (only reachable with unsmoothed Naive Bayes).
class UnclassifiableError : public PipelineError {
 public:
  explicit UnclassifiableError(const std::string& what)
      : PipelineError(what) {}
};

// Rethrows `e` as the same error kind with `context` prefixed to the message.
[[noreturn]] void rethrow_with_context(const Error& e,
                                       const std::string& context);

}  // namespace hca
