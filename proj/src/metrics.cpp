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

#include "hca/classify.hpp"
#include "hca/error.hpp"

namespace hca::classify {

Metrics evaluate(const std::vector<std::size_t>& predicted,
                 const std::vector<std::size_t>& gold, std::size_t m) {
  if (predicted.empty()) throw ValidationError("nothing to evaluate");
  if (predicted.size() != gold.size()) {
    throw ValidationError("evaluate: " + std::to_string(predicted.size()) +
                          " predictions but " + std::to_string(gold.size()) +
                          " gold labels");
  }
  Metrics r;
  r.confusion.assign(m, std::vector<std::uint64_t>(m, 0));
  for (std::size_t j = 0; j < gold.size(); ++j) {
    if (gold[j] >= m || predicted[j] >= m) {
      throw ValidationError("evaluate: label out of range");
    }
    ++r.confusion[gold[j]][predicted[j]];
  }
  r.total = gold.size();

  std::uint64_t correct = 0;
  std::size_t active = 0;  // classes present in gold or predictions
  r.precision.assign(m, 0.0);
  r.recall.assign(m, 0.0);
  r.f1.assign(m, 0.0);
  for (std::size_t c = 0; c < m; ++c) {
    const std::uint64_t tp = r.confusion[c][c];
    correct += tp;
    std::uint64_t row = 0, col = 0;
    for (std::size_t k = 0; k < m; ++k) {
      row += r.confusion[c][k];
      col += r.confusion[k][c];
    }
    if (col > 0) r.precision[c] = double(tp) / double(col);
    if (row > 0) r.recall[c] = double(tp) / double(row);
    const double pr = r.precision[c] + r.recall[c];
    if (pr > 0.0) r.f1[c] = 2.0 * r.precision[c] * r.recall[c] / pr;
    if (row + col > 0) {
      r.macro_f1 += r.f1[c];
      ++active;
    }
  }
  r.macro_f1 /= double(active);
  r.accuracy = double(correct) / double(r.total);
  return r;
}

}  // namespace hca::classify
