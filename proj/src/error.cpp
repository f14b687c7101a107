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

#include "hca/error.hpp"

namespace hca {

int Error::exit_code() const {
  switch (kind_) {
    case Kind::kValidation:
      return 2;
    case Kind::kIo:
      return 3;
    case Kind::kDivergence:
    case Kind::kPipeline:
      return 4;
  }
  return 4;
}

void rethrow_with_context(const Error& e, const std::string& context) {
  const std::string msg = context + ": " + e.what();
  switch (e.kind()) {
    case Error::Kind::kValidation:
      throw ValidationError(msg);
    case Error::Kind::kIo:
      throw IoError(msg);
    case Error::Kind::kDivergence:
      if (auto* d = dynamic_cast<const DivergenceError*>(&e)) {
        throw DivergenceError(msg, d->epoch());
      }
      throw DivergenceError(msg, -1);
    case Error::Kind::kPipeline:
      throw PipelineError(msg);
  }
  throw PipelineError(msg);
}

}  // namespace hca
