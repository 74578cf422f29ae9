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

#ifndef SIG_DATASET_H_
#define SIG_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sig {

// Dense tabular classification data. Row-major feature matrix.
struct Dataset {
  std::vector<std::string> feature_names;
  std::vector<std::string> class_names;
  std::vector<double> values;  // num_rows() * num_features()
  std::vector<int> labels;

  std::size_t num_features() const { return feature_names.size(); }
  std::size_t num_rows() const { return labels.size(); }
  std::size_t num_classes() const { return class_names.size(); }

  std::span<const double> row(std::size_t i) const {
    return {values.data() + i * num_features(), num_features()};
  }
  double at(std::size_t i, std::size_t j) const {
    return values[i * num_features() + j];
  }

  // Throws DataError if the shape or label invariants are violated.
  void Validate() const;

  // Rows picked by index, same schema.
  Dataset Subset(std::span<const std::size_t> rows) const;

  bool operator==(const Dataset&) const = default;
};

struct CsvOptions {
  // Empty selects the last column.
  std::string target;
  std::vector<std::string> drop;
};

// Header row first; every non-target column must be numeric. Class names are
// sorted numerically when every label parses as a number, lexicographically
// otherwise.
Dataset ParseCsv(std::string_view text, const CsvOptions& options = {});
Dataset LoadCsv(const std::string& path, const CsvOptions& options = {});

struct Split {
  Dataset train;
  Dataset test;
};

// Per-class shuffled split; each class contributes round(train_fraction * n_c)
// rows to the training fold (at least one when the class has two or more rows).
// With stratify=false the whole index set is shuffled and cut once.
Split TrainTestSplit(const Dataset& data, double train_fraction, bool stratify,
                     std::uint64_t seed);

// Seeded synthetic binary classification problem. The label depends on the
// first few features through linear terms and one pairwise product, so
// trained trees have real interactions to expose.
Dataset MakeSyntheticDataset(std::size_t num_rows, std::size_t num_features,
                             std::uint64_t seed, std::size_t num_classes = 2);

}  // namespace sig

#endif  // SIG_DATASET_H_
