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

#ifndef SIG_FOREST_H_
#define SIG_FOREST_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sig/dataset.h"

namespace sig {

using NodeId = std::int32_t;

struct TreeNode {
  enum class Kind { kSplit, kLeaf };

  Kind kind = Kind::kLeaf;
  // Split fields. A row goes left when value <= threshold.
  int feature = -1;
  double threshold = 0.0;
  NodeId left = -1;
  NodeId right = -1;
  // Leaf field.
  std::vector<std::int64_t> class_counts;

  bool is_leaf() const { return kind == Kind::kLeaf; }

  static TreeNode Split(int feature, double threshold, NodeId left,
                        NodeId right) {
    TreeNode n;
    n.kind = Kind::kSplit;
    n.feature = feature;
    n.threshold = threshold;
    n.left = left;
    n.right = right;
    return n;
  }
  static TreeNode Leaf(std::vector<std::int64_t> counts) {
    TreeNode n;
    n.class_counts = std::move(counts);
    return n;
  }

  bool operator==(const TreeNode&) const = default;
};

// Node arena; a node's id is its index.
struct Tree {
  NodeId root = 0;
  std::vector<TreeNode> nodes;

  const TreeNode& node(NodeId id) const { return nodes[static_cast<std::size_t>(id)]; }
  NodeId LeafFor(std::span<const double> row) const;
  std::size_t NumLeaves() const;

  bool operator==(const Tree&) const = default;
};

struct ForestParams {
  std::size_t n_trees = 15;
  std::size_t max_depth = 6;
  std::size_t min_samples_split = 2;
  // 0 selects ceil(sqrt(f)).
  std::size_t features_per_split = 0;
  bool bootstrap = true;
  std::uint64_t seed = 42;

  bool operator==(const ForestParams&) const = default;
};

struct Forest {
  std::vector<Tree> trees;
  std::vector<std::string> feature_names;
  std::vector<std::string> class_names;
  ForestParams params;

  std::size_t num_features() const { return feature_names.size(); }
  std::size_t num_classes() const { return class_names.size(); }
  std::size_t NumLeaves() const;

  // Throws DataError naming the offending tree/node when the arena is not a
  // rooted binary tree or a feature/class reference is out of range.
  void Validate() const;

  // Structural equality: trees and name tables. Training params are
  // provenance and are not compared.
  bool operator==(const Forest& other) const {
    return trees == other.trees && feature_names == other.feature_names &&
           class_names == other.class_names;
  }
};

// Index of the largest count; ties go to the lowest class id.
int ArgMax(std::span<const std::int64_t> counts);

// CART with Gini impurity and midpoint thresholds. Tree t draws from an RNG
// stream derived from (params.seed, t), so the result does not depend on the
// number of worker threads.
Forest TrainForest(const Dataset& data, const ForestParams& params);

// Majority vote of per-tree leaf argmax; ties go to the lowest class id.
int Predict(const Forest& forest, std::span<const double> row);

double Accuracy(const Forest& forest, const Dataset& data);

}  // namespace sig

#endif  // SIG_FOREST_H_
