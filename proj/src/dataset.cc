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

#include "sig/dataset.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "sig/error.h"

namespace sig {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Splits one CSV record. Double quotes group commas; "" escapes a quote.
std::vector<std::string> SplitRecord(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back(Trim(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.emplace_back(Trim(field));
  return fields;
}

bool ParseDouble(std::string_view s, double& out) {
  s = Trim(s);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

}  // namespace

void Dataset::Validate() const {
  if (feature_names.empty()) throw DataError("dataset has no feature columns");
  if (num_rows() < 2) throw DataError("dataset needs at least 2 rows");
  if (values.size() != num_rows() * num_features()) {
    throw DataError("feature matrix shape does not match labels");
  }
  for (const int label : labels) {
    if (label < 0 || static_cast<std::size_t>(label) >= class_names.size()) {
      throw DataError("label id out of range");
    }
  }
  for (const double v : values) {
    if (!std::isfinite(v)) throw DataError("non-finite feature value");
  }
}

Dataset Dataset::Subset(std::span<const std::size_t> rows) const {
  Dataset out;
  out.feature_names = feature_names;
  out.class_names = class_names;
  out.values.reserve(rows.size() * num_features());
  out.labels.reserve(rows.size());
  for (const std::size_t r : rows) {
    const auto src = row(r);
    out.values.insert(out.values.end(), src.begin(), src.end());
    out.labels.push_back(labels[r]);
  }
  return out;
}

Dataset ParseCsv(std::string_view text, const CsvOptions& options) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    if (!Trim(line).empty()) lines.push_back(line);
    pos = end + 1;
  }
  if (lines.empty()) throw DataError("CSV is empty");

  const std::vector<std::string> header = SplitRecord(lines[0]);
  std::size_t target = header.size() - 1;
  if (!options.target.empty()) {
    const auto it = std::find(header.begin(), header.end(), options.target);
    if (it == header.end()) {
      throw InputError("target column '" + options.target + "' not found");
    }
    target = static_cast<std::size_t>(it - header.begin());
  }
  for (const auto& name : options.drop) {
    if (std::find(header.begin(), header.end(), name) == header.end()) {
      throw InputError("drop column '" + name + "' not found");
    }
    if (name == header[target]) {
      throw InputError("cannot drop the target column '" + name + "'");
    }
  }

  std::vector<std::size_t> feature_columns;
  Dataset data;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c == target) continue;
    if (std::find(options.drop.begin(), options.drop.end(), header[c]) !=
        options.drop.end()) {
      continue;
    }
    feature_columns.push_back(c);
    data.feature_names.push_back(header[c]);
  }
  if (std::set<std::string>(data.feature_names.begin(),
                            data.feature_names.end())
          .size() != data.feature_names.size()) {
    throw DataError("duplicate feature column names");
  }

  std::vector<std::string> raw_labels;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const std::vector<std::string> fields = SplitRecord(lines[li]);
    if (fields.size() != header.size()) {
      throw DataError("CSV line " + std::to_string(li + 1) + " has " +
                      std::to_string(fields.size()) + " fields, expected " +
                      std::to_string(header.size()));
    }
    for (const std::size_t c : feature_columns) {
      double v = 0;
      if (!ParseDouble(fields[c], v)) {
        throw DataError("CSV line " + std::to_string(li + 1) + ", column '" +
                        header[c] + "': not a finite number: '" + fields[c] +
                        "'");
      }
      data.values.push_back(v);
    }
    raw_labels.push_back(fields[target]);
  }

  std::set<std::string> distinct(raw_labels.begin(), raw_labels.end());
  std::vector<std::string> names(distinct.begin(), distinct.end());
  bool numeric = true;
  std::map<std::string, double> numeric_value;
  for (const auto& n : names) {
    double v = 0;
    if (!ParseDouble(n, v)) {
      numeric = false;
      break;
    }
    numeric_value[n] = v;
  }
  if (numeric) {
    std::stable_sort(names.begin(), names.end(),
                     [&](const std::string& a, const std::string& b) {
                       return numeric_value[a] < numeric_value[b];
                     });
  }
  std::map<std::string, int> label_id;
  for (std::size_t i = 0; i < names.size(); ++i) {
    label_id[names[i]] = static_cast<int>(i);
  }
  data.class_names = names;
  for (const auto& l : raw_labels) data.labels.push_back(label_id[l]);
  data.Validate();
  return data;
}

Dataset LoadCsv(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open CSV file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseCsv(buffer.str(), options);
}

Split TrainTestSplit(const Dataset& data, double train_fraction, bool stratify,
                     std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw InputError("split ratio must lie in (0, 1)");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> train_rows;
  std::vector<std::size_t> test_rows;
  auto cut = [&](std::vector<std::size_t> group) {
    std::shuffle(group.begin(), group.end(), rng);
    auto n_train = static_cast<std::size_t>(
        std::llround(train_fraction * static_cast<double>(group.size())));
    if (group.size() >= 2) n_train = std::clamp<std::size_t>(n_train, 1, group.size() - 1);
    train_rows.insert(train_rows.end(), group.begin(), group.begin() + n_train);
    test_rows.insert(test_rows.end(), group.begin() + n_train, group.end());
  };
  if (stratify) {
    std::vector<std::vector<std::size_t>> by_class(data.num_classes());
    for (std::size_t i = 0; i < data.num_rows(); ++i) {
      by_class[data.labels[i]].push_back(i);
    }
    for (auto& group : by_class) cut(std::move(group));
  } else {
    std::vector<std::size_t> all(data.num_rows());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    cut(std::move(all));
  }
  std::sort(train_rows.begin(), train_rows.end());
  std::sort(test_rows.begin(), test_rows.end());
  return {data.Subset(train_rows), data.Subset(test_rows)};
}

Dataset MakeSyntheticDataset(std::size_t num_rows, std::size_t num_features,
                             std::uint64_t seed, std::size_t num_classes) {
  if (num_rows < 2 || num_features < 1 || num_classes < 2) {
    throw InputError("synthetic dataset needs >= 2 rows, >= 1 feature, >= 2 classes");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Dataset data;
  for (std::size_t j = 0; j < num_features; ++j) {
    data.feature_names.push_back("x" + std::to_string(j));
  }
  for (std::size_t c = 0; c < num_classes; ++c) {
    data.class_names.push_back(std::to_string(c));
  }
  const std::size_t informative = std::min<std::size_t>(num_features, 5);
  std::vector<double> weights(informative);
  for (auto& w : weights) w = gauss(rng);
  std::vector<double> scores(num_rows);
  data.values.resize(num_rows * num_features);
  for (std::size_t i = 0; i < num_rows; ++i) {
    double score = 0.0;
    for (std::size_t j = 0; j < num_features; ++j) {
      // Quantized to two decimals so split thresholds print without loss.
      const double v = std::round(gauss(rng) * 100.0) / 100.0;
      data.values[i * num_features + j] = v;
      if (j < informative) score += weights[j] * v;
    }
    if (num_features >= 2) score += 1.5 * data.values[i * num_features] *
                                    data.values[i * num_features + 1];
    scores[i] = score + 0.25 * gauss(rng);
  }
  // Class boundaries at score quantiles keep the classes balanced.
  std::vector<double> sorted = scores;
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> cuts;
  for (std::size_t c = 1; c < num_classes; ++c) {
    cuts.push_back(sorted[c * num_rows / num_classes]);
  }
  data.labels.resize(num_rows);
  for (std::size_t i = 0; i < num_rows; ++i) {
    data.labels[i] = static_cast<int>(
        std::upper_bound(cuts.begin(), cuts.end(), scores[i]) - cuts.begin());
  }
  return data;
}

}  // namespace sig
