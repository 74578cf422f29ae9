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

#ifndef SIG_TFIDF_H_
#define SIG_TFIDF_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sig {

using TokenList = std::vector<std::string>;

// Token -> column; columns follow lexicographic (byte) order of the tokens.
class Vocabulary {
 public:
  static Vocabulary Build(std::span<const TokenList> token_lists);

  std::size_t size() const { return tokens_.size(); }
  const std::string& Token(std::size_t column) const { return tokens_[column]; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  // Column of `token`, or size() when absent.
  std::size_t Column(const std::string& token) const;

 private:
  std::vector<std::string> tokens_;
  std::map<std::string, std::size_t, std::less<>> columns_;
};

// Row-per-rule TF-IDF weights. Stored sparsely: a row holds (column, weight)
// pairs for the tokens its rule contains, in ascending column order.
class TfIdfMatrix {
 public:
  using Entry = std::pair<std::size_t, double>;

  TfIdfMatrix(Vocabulary vocab, std::vector<std::vector<Entry>> rows)
      : vocab_(std::move(vocab)), rows_(std::move(rows)) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return vocab_.size(); }
  const Vocabulary& vocab() const { return vocab_; }
  std::span<const Entry> row(std::size_t i) const { return rows_[i]; }

  double at(std::size_t i, std::size_t j) const;
  std::vector<double> DenseRow(std::size_t i) const;
  double RowNorm(std::size_t i) const;

  // CSV: header of tokens, one line per rule.
  std::string ToCsv() const;

 private:
  Vocabulary vocab_;
  std::vector<std::vector<Entry>> rows_;
};

// tf = count / row token total; idf = ln(n / (1 + df)); rows scaled to unit
// L2 norm (all-zero rows stay zero). Negative idf values are kept as is.
TfIdfMatrix ComputeTfIdf(std::span<const TokenList> token_lists);

}  // namespace sig

#endif  // SIG_TFIDF_H_
