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

#include "hca/classify.hpp"
#include "hca/error.hpp"

namespace hca::classify {

SparseVector SparseVector::from_counts(const features::FeatureVector& fv) {
  SparseVector v;
  v.entries.reserve(fv.counts.size());
  for (const auto& [i, c] : fv.counts) v.entries.emplace_back(i, double(c));
  return v;
}

double dot(std::span<const double> w, const SparseVector& x) {
  double s = 0.0;
  for (const auto& [i, v] : x.entries) s += w[i] * v;
  return s;
}

void LabeledSet::validate(bool require_every_class) const {
  const std::size_t m = num_classes();
  if (m == 0) throw ValidationError("labeled set has no categories");
  if (vectors.empty()) throw ValidationError("labeled set is empty");
  if (vectors.size() != labels.size()) {
    throw ValidationError("labeled set: " + std::to_string(vectors.size()) +
                          " vectors but " + std::to_string(labels.size()) +
                          " labels");
  }
  std::vector<std::size_t> per_class(m, 0);
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (labels[j] >= m) {
      throw ValidationError("label " + std::to_string(labels[j]) +
                            " out of range for " + std::to_string(m) +
                            " categories");
    }
    ++per_class[labels[j]];
    for (const auto& [i, v] : vectors[j].entries) {
      if (i >= dim) {
        throw ValidationError("feature index " + std::to_string(i) +
                              " out of range for dimension " +
                              std::to_string(dim));
      }
      if (!std::isfinite(v)) throw ValidationError("non-finite feature value");
    }
  }
  if (require_every_class) {
    for (std::size_t c = 0; c < m; ++c) {
      if (per_class[c] == 0) {
        throw ValidationError("category '" + category_names[c] +
                              "' has no training examples");
      }
    }
  }
}

void TrainConfig::validate() const {
  if (epochs <= 0) throw ValidationError("epochs must be positive");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw ValidationError("learning rate must be positive");
  }
  if (!(l2 >= 0.0) || !std::isfinite(l2)) {
    throw ValidationError("l2 must be non-negative");
  }
  if (!(tolerance > 0.0)) throw ValidationError("tolerance must be positive");
}

std::string_view kind_name(ClassifierKind k) {
  switch (k) {
    case ClassifierKind::kNaiveBayes:
      return "nb";
    case ClassifierKind::kMaxEnt:
      return "maxent";
    case ClassifierKind::kSvm:
      return "svm";
  }
  return "svm";
}

ClassifierKind parse_kind(std::string_view s) {
  if (s == "nb") return ClassifierKind::kNaiveBayes;
  if (s == "maxent") return ClassifierKind::kMaxEnt;
  if (s == "svm") return ClassifierKind::kSvm;
  throw ValidationError("unknown classifier '" + std::string(s) +
                        "' (expected nb, maxent or svm)");
}

std::string_view score_kind(ClassifierKind k) {
  return k == ClassifierKind::kSvm ? "margin" : "posterior";
}

ClassifierKind model_kind(const Model& model) {
  return static_cast<ClassifierKind>(model.index());
}

std::size_t model_classes(const Model& model) {
  return std::visit([](const auto& m) { return m.num_classes(); }, model);
}

std::size_t model_dim(const Model& model) {
  return std::visit([](const auto& m) { return m.dim(); }, model);
}

Model train(ClassifierKind kind, const LabeledSet& data, const TrainConfig& cfg,
            double smoothing) {
  switch (kind) {
    case ClassifierKind::kNaiveBayes:
      return nb_train(data, smoothing);
    case ClassifierKind::kMaxEnt:
      return maxent_train(data, cfg);
    case ClassifierKind::kSvm:
      return svm_train(data, cfg);
  }
  throw ValidationError("unknown classifier kind");
}

Prediction predict(const Model& model, const SparseVector& x) {
  if (const auto* nb = std::get_if<NBModel>(&model)) {
    Prediction p = nb_predict(*nb, x);
    for (double& s : p.scores) s = std::exp(s);
    return p;
  }
  if (const auto* me = std::get_if<MaxEntModel>(&model)) {
    return maxent_predict(*me, x);
  }
  return svm_predict(std::get<SVMModel>(model), x);
}

}  // namespace hca::classify
