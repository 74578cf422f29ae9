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

#include "sig/rules.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <utility>

#include "sig/error.h"

namespace sig {
namespace {

std::string Fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

const char* OpToken(CompareOp op) { return op == CompareOp::kLte ? "LTE" : "GT"; }

class RuleParser {
 public:
  explicit RuleParser(std::string_view text) : text_(text) {}

  std::vector<std::string> Parse() {
    std::vector<std::string> tokens;
    if (text_.empty()) return tokens;
    ParseAtom(tokens);
    while (pos_ < text_.size()) {
      if (Consume(" AND ")) {
        tokens.emplace_back("AND");
      } else if (Consume(" OR ")) {
        tokens.emplace_back("OR");
      } else {
        Fail("expected \" AND \" between atoms");
      }
      ParseAtom(tokens);
    }
    return tokens;
  }

 private:
  void ParseAtom(std::vector<std::string>& tokens) {
    Expect("(FEAT_");
    const std::size_t id_begin = pos_;
    Digits();
    tokens.emplace_back("FEAT_" + std::string(text_.substr(id_begin, pos_ - id_begin)));
    Expect("_");
    if (Consume("LTE")) {
      tokens.emplace_back("LTE");
    } else if (Consume("GT")) {
      tokens.emplace_back("GT");
    } else {
      Fail("expected LTE or GT");
    }
    Expect("_");
    const std::size_t num_begin = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    Digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      Digits();
    }
    tokens.emplace_back(text_.substr(num_begin, pos_ - num_begin));
    Expect(")");
  }

  void Digits() {
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == begin) Fail("expected digit");
  }

  bool Consume(std::string_view lit) {
    if (text_.substr(pos_, lit.size()) == lit) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  void Expect(std::string_view lit) {
    if (!Consume(lit)) Fail("expected \"" + std::string(lit) + "\"");
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError("malformed rule: " + what, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

bool DecisionRule::Matches(std::span<const double> row) const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [&](const Condition& c) { return c.Holds(row); });
}

std::vector<DecisionRule> ExtractRules(const Forest& forest) {
  std::vector<DecisionRule> rules;
  for (std::size_t t = 0; t < forest.trees.size(); ++t) {
    const Tree& tree = forest.trees[t];
    std::vector<std::pair<NodeId, std::vector<Condition>>> stack;
    stack.emplace_back(tree.root, std::vector<Condition>{});
    while (!stack.empty()) {
      auto [id, path] = std::move(stack.back());
      stack.pop_back();
      const TreeNode& node = tree.node(id);
      if (node.is_leaf()) {
        rules.push_back({std::move(path), ArgMax(node.class_counts), t, id});
        continue;
      }
      std::vector<Condition> right = path;
      right.push_back({node.feature, CompareOp::kGt, node.threshold});
      path.push_back({node.feature, CompareOp::kLte, node.threshold});
      stack.emplace_back(node.right, std::move(right));
      stack.emplace_back(node.left, std::move(path));
    }
  }
  return rules;
}

std::string RenderRule(const DecisionRule& rule,
                       std::span<const std::string> feature_names) {
  std::string out;
  for (std::size_t i = 0; i < rule.conditions.size(); ++i) {
    const Condition& c = rule.conditions[i];
    if (i > 0) out += " AND ";
    out += "(" + feature_names[static_cast<std::size_t>(c.feature)] +
           (c.op == CompareOp::kLte ? " <= " : " > ") + Fixed2(c.threshold) + ")";
  }
  return out;
}

LabelEncoding LabelEncoding::Fit(std::span<const std::string> feature_names) {
  LabelEncoding enc;
  for (const auto& name : feature_names) {
    if (name.empty()) throw InputError("feature names must be non-empty");
  }
  enc.names_.assign(feature_names.begin(), feature_names.end());
  std::sort(enc.names_.begin(), enc.names_.end());
  if (std::adjacent_find(enc.names_.begin(), enc.names_.end()) != enc.names_.end()) {
    throw InputError("duplicate feature name '" +
                     *std::adjacent_find(enc.names_.begin(), enc.names_.end()) + "'");
  }
  for (std::size_t i = 0; i < enc.names_.size(); ++i) {
    enc.ids_.emplace(enc.names_[i], static_cast<int>(i));
  }
  enc.column_of_id_.resize(feature_names.size());
  for (std::size_t c = 0; c < feature_names.size(); ++c) {
    const int id = enc.ids_.find(feature_names[c])->second;
    enc.id_of_column_.push_back(id);
    enc.column_of_id_[static_cast<std::size_t>(id)] = static_cast<int>(c);
  }
  return enc;
}

int LabelEncoding::Id(std::string_view name) const {
  const auto it = ids_.find(name);
  if (it == ids_.end()) throw InputError("no encoding for feature '" + std::string(name) + "'");
  return it->second;
}

int LabelEncoding::IdForColumn(int column) const {
  if (column < 0 || static_cast<std::size_t>(column) >= id_of_column_.size()) {
    throw InputError("no encoding for feature column " + std::to_string(column));
  }
  return id_of_column_[static_cast<std::size_t>(column)];
}

int LabelEncoding::ColumnForId(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= column_of_id_.size()) {
    throw InputError("unknown encoded feature id " + std::to_string(id));
  }
  return column_of_id_[static_cast<std::size_t>(id)];
}

EncodedRule StandardizeRule(const DecisionRule& rule, const LabelEncoding& enc) {
  EncodedRule out;
  for (std::size_t i = 0; i < rule.conditions.size(); ++i) {
    const Condition& c = rule.conditions[i];
    if (i > 0) {
      out.text += " AND ";
      out.tokens.emplace_back("AND");
    }
    const std::string feat = "FEAT_" + std::to_string(enc.IdForColumn(c.feature));
    const std::string thr = Fixed2(c.threshold);
    out.text += "(" + feat + "_" + OpToken(c.op) + "_" + thr + ")";
    out.tokens.push_back(feat);
    out.tokens.emplace_back(OpToken(c.op));
    out.tokens.push_back(thr);
  }
  return out;
}

std::vector<std::string> Tokenize(std::string_view text) { return RuleParser(text).Parse(); }

std::string FormatRulesDump(std::span<const DecisionRule> rules,
                            std::span<const EncodedRule> encoded,
                            std::span<const std::string> class_names) {
  std::string out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    out += encoded[i].text + " => class=" +
           class_names[static_cast<std::size_t>(rules[i].predicted_class)] +
           "\t(tree=" + std::to_string(rules[i].tree_id) + ")\n";
  }
  return out;
}

}  // namespace sig
