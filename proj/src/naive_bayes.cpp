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

#include <cmath>
#include <limits>

#include "hca/classify.hpp"
#include "hca/error.hpp"

namespace hca::classify {

NBModel nb_train(const LabeledSet& data, double smoothing) {
  data.validate(/*require_every_class=*/true);
  if (!(smoothing >= 0.0) || !std::isfinite(smoothing)) {
    throw ValidationError("smoothing must be non-negative");
  }
  const std::size_t m = data.num_classes();
  const std::size_t dim = data.dim;

  Matrix counts(m, dim);
  std::vector<double> totals(m, 0.0);
  std::vector<double> docs(m, 0.0);
  for (std::size_t j = 0; j < data.vectors.size(); ++j) {
    const std::size_t c = data.labels[j];
    docs[c] += 1.0;
    for (const auto& [i, v] : data.vectors[j].entries) {
      if (v < 0.0) throw ValidationError("Naive Bayes needs non-negative counts");
      counts(c, i) += v;
      totals[c] += v;
    }
  }

  NBModel model;
  model.smoothing = smoothing;
  model.log_priors.resize(m);
  model.log_likelihoods = Matrix(m, dim);
  const double n = static_cast<double>(data.vectors.size());
  const double neg_inf = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < m; ++c) {
    model.log_priors[c] = std::log(docs[c] / n);
    const double denom = totals[c] + smoothing * static_cast<double>(dim);
    if (denom <= 0.0) {
      throw ValidationError("category '" + data.category_names[c] +
                            "' has no words and smoothing is 0");
    }
    const double log_denom = std::log(denom);
    for (std::size_t i = 0; i < dim; ++i) {
      const double num = counts(c, i) + smoothing;
      model.log_likelihoods(c, i) =
          num > 0.0 ? std::log(num) - log_denom : neg_inf;
    }
  }
  return model;
}

Prediction nb_predict(const NBModel& model, const SparseVector& x) {
  const std::size_t m = model.num_classes();
  const double neg_inf = -std::numeric_limits<double>::infinity();
  std::vector<double> score(m);
  for (std::size_t c = 0; c < m; ++c) {
    double s = model.log_priors[c];
    for (const auto& [i, v] : x.entries) {
      if (v == 0.0) continue;
      const double ll = model.log_likelihoods(c, i);
      if (ll == neg_inf) {
        s = neg_inf;
        break;
      }
      s += v * ll;
    }
    score[c] = s;
  }

  Prediction p;
  double best = neg_inf;
  for (std::size_t c = 0; c < m; ++c) {
    if (score[c] > best) {
      best = score[c];
      p.category = c;
    }
  }
  if (best == neg_inf) {
    throw UnclassifiableError(
        "every category has zero probability for this document");
  }
  double sum = 0.0;
  for (double s : score) sum += std::exp(s - best);
  const double log_z = best + std::log(sum);
  p.scores.resize(m);
  for (std::size_t c = 0; c < m; ++c) p.scores[c] = score[c] - log_z;
  return p;
}

}  // namespace hca::classify
