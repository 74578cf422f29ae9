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

#include "sig/forest_io.h"

#include <cstdio>
#include <string>

#include "json.hpp"
#include "sig/error.h"

namespace sig {
namespace {

using nlohmann::json;

std::string Quote(const std::string& s) { return json(s).dump(); }

std::string FormatThreshold(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string NameList(const std::vector<std::string>& names) {
  std::string out = "[";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ",";
    out += Quote(names[i]);
  }
  return out + "]";
}

const json& Require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw DataError(where + ": missing \"" + key + "\"");
  }
  return obj.at(key);
}

std::int64_t RequireInt(const json& obj, const char* key, const std::string& where) {
  const json& v = Require(obj, key, where);
  if (!v.is_number_integer()) {
    throw DataError(where + ": \"" + key + "\" must be an integer");
  }
  return v.get<std::int64_t>();
}

std::vector<std::string> RequireNames(const json& doc, const char* key) {
  const json& v = Require(doc, key, "forest document");
  if (!v.is_array()) throw DataError(std::string("\"") + key + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw DataError(std::string("\"") + key + "\" entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

std::string ExportForest(const Forest& forest) {
  std::string out = "{\"feature_names\":" + NameList(forest.feature_names) +
                    ",\"class_names\":" + NameList(forest.class_names) +
                    ",\"trees\":[\n";
  for (std::size_t t = 0; t < forest.trees.size(); ++t) {
    const Tree& tree = forest.trees[t];
    out += "{\"root\":" + std::to_string(tree.root) + ",\"nodes\":[\n";
    for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
      const TreeNode& n = tree.nodes[id];
      out += "{\"id\":" + std::to_string(id);
      if (n.is_leaf()) {
        out += ",\"kind\":\"leaf\",\"class_counts\":[";
        for (std::size_t c = 0; c < n.class_counts.size(); ++c) {
          if (c > 0) out += ",";
          out += std::to_string(n.class_counts[c]);
        }
        out += "]}";
      } else {
        out += ",\"kind\":\"split\",\"feature\":" + std::to_string(n.feature) +
               ",\"threshold\":" + FormatThreshold(n.threshold) +
               ",\"left\":" + std::to_string(n.left) +
               ",\"right\":" + std::to_string(n.right) + "}";
      }
      out += id + 1 < tree.nodes.size() ? ",\n" : "\n";
    }
    out += t + 1 < forest.trees.size() ? "]},\n" : "]}\n";
  }
  out += "]}\n";
  return out;
}

Forest ImportForest(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("forest document is not valid JSON: ") + e.what(),
                     e.byte);
  }
  if (!doc.is_object()) throw DataError("forest document must be a JSON object");

  Forest forest;
  forest.feature_names = RequireNames(doc, "feature_names");
  forest.class_names = RequireNames(doc, "class_names");
  const json& trees = Require(doc, "trees", "forest document");
  if (!trees.is_array()) throw DataError("\"trees\" must be an array");

  for (std::size_t t = 0; t < trees.size(); ++t) {
    const std::string tree_where = "tree " + std::to_string(t);
    const json& jt = trees[t];
    const json& nodes = Require(jt, "nodes", tree_where);
    if (!nodes.is_array()) throw DataError(tree_where + ": \"nodes\" must be an array");
    Tree tree;
    tree.root = static_cast<NodeId>(RequireInt(jt, "root", tree_where));
    tree.nodes.resize(nodes.size());
    std::vector<bool> filled(nodes.size(), false);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const json& jn = nodes[k];
      const std::string entry_where = tree_where + " entry " + std::to_string(k);
      const std::int64_t id = RequireInt(jn, "id", entry_where);
      const std::string where = tree_where + " node " + std::to_string(id);
      if (id < 0 || static_cast<std::size_t>(id) >= nodes.size()) {
        throw DataError(where + ": id outside 0.." + std::to_string(nodes.size() - 1));
      }
      if (filled[static_cast<std::size_t>(id)]) throw DataError(where + ": duplicate id");
      filled[static_cast<std::size_t>(id)] = true;
      const json& kind = Require(jn, "kind", where);
      TreeNode node;
      if (kind == "leaf") {
        const json& counts = Require(jn, "class_counts", where);
        if (!counts.is_array()) throw DataError(where + ": class_counts must be an array");
        std::vector<std::int64_t> c;
        for (const auto& e : counts) {
          if (!e.is_number_integer()) throw DataError(where + ": class_counts must be integers");
          c.push_back(e.get<std::int64_t>());
        }
        node = TreeNode::Leaf(std::move(c));
      } else if (kind == "split") {
        const json& thr = Require(jn, "threshold", where);
        if (!thr.is_number()) throw DataError(where + ": threshold must be a number");
        const std::int64_t left = RequireInt(jn, "left", where);
        const std::int64_t right = RequireInt(jn, "right", where);
        for (const std::int64_t child : {left, right}) {
          if (child < 0 || static_cast<std::size_t>(child) >= nodes.size()) {
            throw DataError(where + ": dangling node id " + std::to_string(child));
          }
        }
        node = TreeNode::Split(static_cast<int>(RequireInt(jn, "feature", where)),
                               thr.get<double>(), static_cast<NodeId>(left),
                               static_cast<NodeId>(right));
      } else {
        throw DataError(where + ": kind must be \"split\" or \"leaf\"");
      }
      tree.nodes[static_cast<std::size_t>(id)] = std::move(node);
    }
    forest.trees.push_back(std::move(tree));
  }
  forest.Validate();
  return forest;
}

}  // namespace sig
