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

#ifndef SIG_RULES_H_
#define SIG_RULES_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sig/forest.h"

namespace sig {

enum class CompareOp { kLte, kGt };

struct Condition {
  int feature = -1;
  CompareOp op = CompareOp::kLte;
  double threshold = 0.0;

  bool Holds(std::span<const double> row) const {
    const double v = row[static_cast<std::size_t>(feature)];
    return op == CompareOp::kLte ? v <= threshold : v > threshold;
  }
  bool operator==(const Condition&) const = default;
};

// One root-to-leaf path. Conditions are in traversal order and keep the full
// precision thresholds; only the encoded text rounds them.
struct DecisionRule {
  std::vector<Condition> conditions;
  int predicted_class = 0;
  std::size_t tree_id = 0;
  NodeId leaf_id = 0;

  bool Matches(std::span<const double> row) const;
  bool operator==(const DecisionRule&) const = default;
};

// Depth-first with an explicit stack, right child pushed before left, so each
// tree's rules come out left to right. One rule per leaf.
std::vector<DecisionRule> ExtractRules(const Forest& forest);

// Human-readable form using the original feature names:
//   "(num_major_vessels <= 0.50) AND (thalassemia <= 2.50)"
std::string RenderRule(const DecisionRule& rule,
                       std::span<const std::string> feature_names);

// Feature name <-> integer id; ids follow lexicographic order of the names.
class LabelEncoding {
 public:
  static LabelEncoding Fit(std::span<const std::string> feature_names);

  std::size_t size() const { return names_.size(); }
  int Id(std::string_view name) const;
  const std::string& Name(int id) const { return names_.at(static_cast<std::size_t>(id)); }
  // Id of the feature at position `column` of the names passed to Fit.
  int IdForColumn(int column) const;
  int ColumnForId(int id) const;

 private:
  std::vector<std::string> names_;          // by id
  std::map<std::string, int, std::less<>> ids_;
  std::vector<int> id_of_column_;
  std::vector<int> column_of_id_;
};

struct EncodedRule {
  std::string text;
  std::vector<std::string> tokens;
};

// "(FEAT_6_LTE_0.50) AND (FEAT_12_LTE_2.50)"; thresholds at 2 decimals.
// Empty conjunction gives "".
EncodedRule StandardizeRule(const DecisionRule& rule, const LabelEncoding& enc);

// Splits encoded text into [FEAT_<id>, LTE|GT, <threshold>, AND, ...].
// Grammar: rule := atom ((" AND " | " OR ") atom)*;
//          atom := "(FEAT_" int "_" ("LTE"|"GT") "_" decimal ")".
// Throws ParseError carrying the byte offset of the first violation.
std::vector<std::string> Tokenize(std::string_view text);

// Rules dump line: "<encoded> => class=<name>\t(tree=<id>)".
std::string FormatRulesDump(std::span<const DecisionRule> rules,
                            std::span<const EncodedRule> encoded,
                            std::span<const std::string> class_names);

}  // namespace sig

#endif  // SIG_RULES_H_
