/*
 * Copyright 2026 The SIG Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "sig/tfidf.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "sig/error.h"

namespace sig {

Vocabulary Vocabulary::Build(std::span<const TokenList> token_lists) {
  std::set<std::string, std::less<>> all;
  for (const auto& list : token_lists) all.insert(list.begin(), list.end());
  if (all.empty()) throw InputError("cannot build a vocabulary from empty token lists");
  Vocabulary vocab;
  vocab.tokens_.assign(all.begin(), all.end());
  for (std::size_t j = 0; j < vocab.tokens_.size(); ++j) {
    vocab.columns_.emplace(vocab.tokens_[j], j);
  }
  return vocab;
}

std::size_t Vocabulary::Column(const std::string& token) const {
  const auto it = columns_.find(token);
  return it == columns_.end() ? size() : it->second;
}

double TfIdfMatrix::at(std::size_t i, std::size_t j) const {
  const auto& r = rows_[i];
  const auto it = std::lower_bound(r.begin(), r.end(), j,
                                   [](const Entry& e, std::size_t c) { return e.first < c; });
  return it != r.end() && it->first == j ? it->second : 0.0;
}

std::vector<double> TfIdfMatrix::DenseRow(std::size_t i) const {
  std::vector<double> out(cols(), 0.0);
  for (const auto& [j, v] : rows_[i]) out[j] = v;
  return out;
}

double TfIdfMatrix::RowNorm(std::size_t i) const {
  double sum = 0.0;
  for (const auto& e : rows_[i]) sum += e.second * e.second;
  return std::sqrt(sum);
}

std::string TfIdfMatrix::ToCsv() const {
  std::string out;
  for (std::size_t j = 0; j < cols(); ++j) {
    if (j > 0) out += ",";
    out += vocab_.Token(j);
  }
  out += "\n";
  char buf[40];
  for (std::size_t i = 0; i < rows(); ++i) {
    const std::vector<double> dense = DenseRow(i);
    for (std::size_t j = 0; j < dense.size(); ++j) {
      if (j > 0) out += ",";
      std::snprintf(buf, sizeof(buf), "%.17g", dense[j]);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

TfIdfMatrix ComputeTfIdf(std::span<const TokenList> token_lists) {
  Vocabulary vocab = Vocabulary::Build(token_lists);
  const std::size_t n = token_lists.size();

  // Raw counts per row, and document frequency per column.
  std::vector<std::vector<TfIdfMatrix::Entry>> rows(n);
  std::vector<std::size_t> df(vocab.size(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> cols;
    cols.reserve(token_lists[i].size());
    for (const auto& tok : token_lists[i]) cols.push_back(vocab.Column(tok));
    std::sort(cols.begin(), cols.end());
    for (std::size_t k = 0; k < cols.size();) {
      std::size_t e = k;
      while (e < cols.size() && cols[e] == cols[k]) ++e;
      rows[i].emplace_back(cols[k], static_cast<double>(e - k));
      ++df[cols[k]];
      k = e;
    }
  }

  std::vector<double> idf(vocab.size());
  for (std::size_t j = 0; j < vocab.size(); ++j) {
    idf[j] = std::log(static_cast<double>(n) / (1.0 + static_cast<double>(df[j])));
  }

  for (std::size_t i = 0; i < n; ++i) {
    const double total = static_cast<double>(token_lists[i].size());
    double norm_sq = 0.0;
    for (auto& [j, v] : rows[i]) {
      v = (v / total) * idf[j];
      norm_sq += v * v;
    }
    const double norm = std::sqrt(norm_sq);
    if (norm > 0.0) {
      for (auto& e : rows[i]) e.second /= norm;
    }
  }
  return TfIdfMatrix(std::move(vocab), std::move(rows));
}

}  // namespace sig
