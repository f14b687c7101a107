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
#include <sstream>

#include "hca/classify.hpp"
#include "hca/error.hpp"
#include "hca/text.hpp"

namespace hca::classify {
namespace {

void write_row(std::string& out, std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += '\t';
    out += text::format_real(values[i]);
  }
  out += '\n';
}

void write_matrix(std::string& out, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) write_row(out, m.row(r));
}

class RowReader {
 public:
  RowReader(std::string_view content, std::string source)
      : lines_(text::split(content, '\n')), source_(std::move(source)) {
    while (!lines_.empty() && lines_.back().empty()) lines_.pop_back();
    for (auto& l : lines_) {
      if (!l.empty() && l.back() == '\r') l.pop_back();
    }
  }

  std::string header() { return next_line("model header"); }

  std::vector<double> row(std::size_t expected, const char* what) {
    const std::string line = next_line(what);
    const auto fields = text::split(line, '\t');
    if (fields.size() != expected) {
      throw ParseError(source_, pos_,
                       std::string(what) + ": expected " +
                           std::to_string(expected) + " values, found " +
                           std::to_string(fields.size()));
    }
    std::vector<double> values;
    values.reserve(expected);
    for (const auto& f : fields) {
      try {
        values.push_back(text::parse_real(f));
      } catch (const ValidationError& e) {
        throw ParseError(source_, pos_, e.what());
      }
    }
    return values;
  }

  Matrix matrix(std::size_t rows, std::size_t cols, const char* what) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const auto values = row(cols, what);
      std::copy(values.begin(), values.end(), m.row(r).begin());
    }
    return m;
  }

  void finish() {
    if (pos_ != lines_.size()) {
      throw ParseError(source_, pos_ + 1, "unexpected trailing data");
    }
  }

 private:
  std::string next_line(const char* what) {
    if (pos_ >= lines_.size()) {
      throw ParseError(source_, pos_ + 1,
                       std::string("truncated model, missing ") + what);
    }
    return lines_[pos_++];
  }

  std::vector<std::string> lines_;
  std::string source_;
  std::size_t pos_ = 0;
};

void require_finite(const std::vector<double>& values,
                    const std::string& source) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw ValidationError(source + ": model parameters must be finite");
    }
  }
}

}  // namespace

std::string write_model(const Model& model) {
  std::string out = "hca-model ";
  out += kind_name(model_kind(model));
  out += ' ' + std::to_string(model_classes(model)) + ' ' +
         std::to_string(model_dim(model)) + '\n';
  if (const auto* nb = std::get_if<NBModel>(&model)) {
    write_row(out, nb->log_priors);
    write_matrix(out, nb->log_likelihoods);
    write_row(out, std::vector<double>{nb->smoothing});
  } else if (const auto* me = std::get_if<MaxEntModel>(&model)) {
    write_matrix(out, me->lambdas);
    write_row(out, me->bias);
  } else {
    const auto& svm = std::get<SVMModel>(model);
    write_matrix(out, svm.weights);
    write_row(out, svm.bias);
    write_row(out, std::vector<double>{svm.regularization});
  }
  return out;
}

Model read_model(std::string_view content, const std::string& source) {
  RowReader reader(content, source);
  std::istringstream header(reader.header());
  std::string magic, kind_str, extra;
  std::size_t m = 0, dim = 0;
  if (!(header >> magic >> kind_str >> m >> dim) || magic != "hca-model" ||
      (header >> extra) || m == 0) {
    throw ParseError(source, 1, "expected 'hca-model <kind> <m> <V>'");
  }
  ClassifierKind kind;
  try {
    kind = parse_kind(kind_str);
  } catch (const ValidationError& e) {
    throw ParseError(source, 1, e.what());
  }

  switch (kind) {
    case ClassifierKind::kNaiveBayes: {
      NBModel nb;
      nb.log_priors = reader.row(m, "log priors");
      nb.log_likelihoods = reader.matrix(m, dim, "log likelihoods");
      nb.smoothing = reader.row(1, "smoothing").front();
      reader.finish();
      return nb;
    }
    case ClassifierKind::kMaxEnt: {
      MaxEntModel me;
      me.lambdas = reader.matrix(m, dim, "lambdas");
      me.bias = reader.row(m, "bias");
      reader.finish();
      require_finite(me.lambdas.data(), source);
      require_finite(me.bias, source);
      return me;
    }
    case ClassifierKind::kSvm: {
      SVMModel svm;
      svm.weights = reader.matrix(m, dim, "weights");
      svm.bias = reader.row(m, "bias");
      svm.regularization = reader.row(1, "regularization").front();
      reader.finish();
      require_finite(svm.weights.data(), source);
      require_finite(svm.bias, source);
      return svm;
    }
  }
  throw ParseError(source, 1, "unknown model kind");
}

}  // namespace hca::classify
