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

#include <algorithm>
#include <cmath>

#include "hca/classify.hpp"
#include "hca/error.hpp"

namespace hca::classify {

double hinge_objective(const std::vector<SparseVector>& xs,
                       const std::vector<int>& ys, std::span<const double> w,
                       double b, double l2) {
  double loss = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    loss += std::max(0.0, 1.0 - ys[j] * (dot(w, xs[j]) + b));
  }
  double norm2 = 0.0;
  for (double v : w) norm2 += v * v;
  return 0.5 * l2 * norm2 + loss / static_cast<double>(xs.size());
}

SVMModel svm_train(const LabeledSet& data, const TrainConfig& cfg,
                   ObjectiveTrace* trace) {
  data.validate(/*require_every_class=*/false);
  cfg.validate();
  const std::size_t m = data.num_classes();
  if (m < 2) throw ValidationError("SVM needs at least 2 categories");
  if (!(cfg.l2 > 0.0)) {
    throw ValidationError("SVM regularization (l2) must be positive");
  }
  const std::size_t n = data.vectors.size();
  const std::size_t dim = data.dim;
  const double inv_n = 1.0 / static_cast<double>(n);

  SVMModel model;
  model.weights = Matrix(m, dim);
  model.bias.assign(m, 0.0);
  model.regularization = cfg.l2;
  if (trace) trace->assign(m, {});

  std::vector<int> ys(n);
  std::vector<double> w(dim), gw(dim);
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t positives = 0;
    for (std::size_t j = 0; j < n; ++j) {
      ys[j] = data.labels[j] == c ? 1 : -1;
      positives += ys[j] > 0;
    }
    if (positives == 0) {
      throw ValidationError("category '" + data.category_names[c] +
                            "' has no positive examples");
    }

    std::fill(w.begin(), w.end(), 0.0);
    double b = 0.0;
    auto best_w = model.weights.row(c);
    double best_b = 0.0;
    double best_obj = hinge_objective(data.vectors, ys, w, b, cfg.l2);

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
      // Subgradient at (w, b); points exactly on the margin contribute 0.
      for (std::size_t i = 0; i < dim; ++i) gw[i] = cfg.l2 * w[i];
      double gb = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double margin = ys[j] * (dot(w, data.vectors[j]) + b);
        if (margin < 1.0) {
          for (const auto& [i, v] : data.vectors[j].entries) {
            gw[i] -= inv_n * ys[j] * v;
          }
          gb -= inv_n * ys[j];
        }
      }
      double gmax = std::abs(gb);
      for (double g : gw) gmax = std::max(gmax, std::abs(g));
      if (gmax < cfg.tolerance) break;

      const double step = cfg.learning_rate / (1.0 + epoch);
      for (std::size_t i = 0; i < dim; ++i) w[i] -= step * gw[i];
      b -= step * gb;

      const double obj = hinge_objective(data.vectors, ys, w, b, cfg.l2);
      if (!std::isfinite(obj)) {
        throw DivergenceError("SVM training for category '" +
                                  data.category_names[c] +
                                  "' diverged at epoch " + std::to_string(epoch),
                              epoch);
      }
      if (obj < best_obj) {
        best_obj = obj;
        std::copy(w.begin(), w.end(), best_w.begin());
        best_b = b;
      }
      if (trace) (*trace)[c].push_back(best_obj);
    }
    model.bias[c] = best_b;
  }
  return model;
}

Prediction svm_predict(const SVMModel& model, const SparseVector& x) {
  Prediction p;
  const std::size_t m = model.num_classes();
  p.scores.resize(m);
  for (std::size_t c = 0; c < m; ++c) {
    p.scores[c] = dot(model.weights.row(c), x) + model.bias[c];
    if (p.scores[c] > p.scores[p.category]) p.category = c;
  }
  return p;
}

}  // namespace hca::classify
