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

#include "sig/forest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sig/error.h"
#include "sig/parallel.h"

namespace sig {
namespace {

double Gini(std::span<const std::int64_t> counts, std::int64_t total) {
  if (total == 0) return 0.0;
  double sum_sq = 0.0;
  for (const auto c : counts) {
    const double p = static_cast<double>(c) / static_cast<double>(total);
    sum_sq += p * p;
  }
  return 1.0 - sum_sq;
}

struct SplitCandidate {
  bool valid = false;
  double impurity = 0.0;  // weighted child impurity, lower is better
  int feature = -1;
  double threshold = 0.0;
};

bool Better(const SplitCandidate& a, const SplitCandidate& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  if (a.impurity != b.impurity) return a.impurity < b.impurity;
  if (a.feature != b.feature) return a.feature < b.feature;
  return a.threshold < b.threshold;
}

class TreeBuilder {
 public:
  TreeBuilder(const Dataset& data, const ForestParams& params,
              std::size_t features_per_split, std::mt19937_64& rng)
      : data_(data),
        params_(params),
        features_per_split_(features_per_split),
        rng_(rng),
        num_classes_(data.num_classes()) {}

  Tree Build(std::vector<std::size_t> samples) {
    Tree tree;
    tree.root = Grow(tree, samples, 0);
    return tree;
  }

 private:
  NodeId Grow(Tree& tree, std::vector<std::size_t>& samples,
              std::size_t depth) {
    std::vector<std::int64_t> counts(num_classes_, 0);
    for (const auto s : samples) ++counts[data_.labels[s]];
    const auto id = static_cast<NodeId>(tree.nodes.size());
    tree.nodes.push_back(TreeNode::Leaf(counts));

    const auto non_zero = std::count_if(counts.begin(), counts.end(),
                                        [](std::int64_t c) { return c > 0; });
    if (depth >= params_.max_depth || samples.size() < params_.min_samples_split ||
        non_zero <= 1) {
      return id;
    }
    const SplitCandidate split = FindSplit(samples, counts);
    if (!split.valid) return id;

    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    for (const auto s : samples) {
      (data_.at(s, split.feature) <= split.threshold ? left : right).push_back(s);
    }
    samples.clear();
    samples.shrink_to_fit();
    const NodeId l = Grow(tree, left, depth + 1);
    const NodeId r = Grow(tree, right, depth + 1);
    tree.nodes[static_cast<std::size_t>(id)] =
        TreeNode::Split(split.feature, split.threshold, l, r);
    return id;
  }

  SplitCandidate FindSplit(const std::vector<std::size_t>& samples,
                           const std::vector<std::int64_t>& counts) {
    std::vector<int> features(data_.num_features());
    std::iota(features.begin(), features.end(), 0);
    std::shuffle(features.begin(), features.end(), rng_);

    SplitCandidate best;
    std::vector<std::size_t> order = samples;
    // The first features_per_split draws are always evaluated; past that,
    // drawing continues only while no valid split has been found.
    for (std::size_t k = 0; k < features.size(); ++k) {
      if (k >= features_per_split_ && best.valid) break;
      const SplitCandidate c = BestForFeature(features[k], order, counts);
      if (Better(c, best)) best = c;
    }
    return best;
  }

  SplitCandidate BestForFeature(int feature, std::vector<std::size_t>& order,
                                const std::vector<std::int64_t>& counts) {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return data_.at(a, feature) < data_.at(b, feature);
    });
    const auto n = static_cast<std::int64_t>(order.size());
    std::vector<std::int64_t> left(num_classes_, 0);
    std::vector<std::int64_t> right = counts;
    SplitCandidate best;
    for (std::int64_t i = 0; i + 1 < n; ++i) {
      const int label = data_.labels[order[i]];
      ++left[label];
      --right[label];
      const double lo = data_.at(order[i], feature);
      const double hi = data_.at(order[i + 1], feature);
      if (!(lo < hi)) continue;
      const std::int64_t n_left = i + 1;
      const std::int64_t n_right = n - n_left;
      const double impurity =
          (static_cast<double>(n_left) * Gini(left, n_left) +
           static_cast<double>(n_right) * Gini(right, n_right)) /
          static_cast<double>(n);
      double threshold = lo + (hi - lo) / 2.0;
      if (!(threshold < hi)) threshold = lo;
      SplitCandidate c{true, impurity, feature, threshold};
      if (Better(c, best)) best = c;
    }
    return best;
  }

  const Dataset& data_;
  const ForestParams& params_;
  std::size_t features_per_split_;
  std::mt19937_64& rng_;
  std::size_t num_classes_;
};

}  // namespace

NodeId Tree::LeafFor(std::span<const double> row) const {
  NodeId id = root;
  while (!node(id).is_leaf()) {
    const TreeNode& n = node(id);
    id = row[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
  }
  return id;
}

std::size_t Tree::NumLeaves() const {
  return static_cast<std::size_t>(std::count_if(
      nodes.begin(), nodes.end(), [](const TreeNode& n) { return n.is_leaf(); }));
}

std::size_t Forest::NumLeaves() const {
  std::size_t total = 0;
  for (const auto& t : trees) total += t.NumLeaves();
  return total;
}

void Forest::Validate() const {
  if (trees.empty()) throw DataError("forest has no trees");
  if (feature_names.empty()) throw DataError("forest has no features");
  if (class_names.empty()) throw DataError("forest has no classes");
  for (std::size_t t = 0; t < trees.size(); ++t) {
    const Tree& tree = trees[t];
    const auto n = tree.nodes.size();
    auto where = [&](std::size_t id) {
      return "tree " + std::to_string(t) + " node " + std::to_string(id);
    };
    if (tree.root < 0 || static_cast<std::size_t>(tree.root) >= n) {
      throw DataError("tree " + std::to_string(t) + ": dangling root id " +
                      std::to_string(tree.root));
    }
    std::vector<int> parents(n, 0);
    for (std::size_t id = 0; id < n; ++id) {
      const TreeNode& node = tree.nodes[id];
      if (node.is_leaf()) {
        if (node.class_counts.size() != class_names.size()) {
          throw DataError(where(id) + ": class_counts length mismatch");
        }
        std::int64_t sum = 0;
        for (const auto c : node.class_counts) {
          if (c < 0) throw DataError(where(id) + ": negative class count");
          sum += c;
        }
        if (sum < 1) throw DataError(where(id) + ": empty leaf");
        continue;
      }
      if (node.feature < 0 ||
          static_cast<std::size_t>(node.feature) >= feature_names.size()) {
        throw DataError(where(id) + ": feature index out of range");
      }
      if (!std::isfinite(node.threshold)) {
        throw DataError(where(id) + ": non-finite threshold");
      }
      for (const NodeId child : {node.left, node.right}) {
        if (child < 0 || static_cast<std::size_t>(child) >= n) {
          throw DataError(where(id) + ": dangling node id " + std::to_string(child));
        }
        ++parents[static_cast<std::size_t>(child)];
      }
      if (node.left == node.right) {
        throw DataError(where(id) + ": children are not distinct");
      }
    }
    // Every node reachable exactly once from the root, root has no parent.
    if (parents[static_cast<std::size_t>(tree.root)] != 0) {
      throw DataError(where(static_cast<std::size_t>(tree.root)) +
                      ": root has a parent");
    }
    std::vector<bool> seen(n, false);
    std::vector<NodeId> stack{tree.root};
    while (!stack.empty()) {
      const NodeId id = stack.back();
      stack.pop_back();
      if (seen[static_cast<std::size_t>(id)]) {
        throw DataError(where(static_cast<std::size_t>(id)) + ": cycle or shared child");
      }
      seen[static_cast<std::size_t>(id)] = true;
      const TreeNode& node = tree.node(id);
      if (!node.is_leaf()) {
        stack.push_back(node.right);
        stack.push_back(node.left);
      }
    }
    for (std::size_t id = 0; id < n; ++id) {
      if (parents[id] > 1) throw DataError(where(id) + ": node has multiple parents");
      if (!seen[id]) throw DataError(where(id) + ": unreachable from root");
    }
  }
}

int ArgMax(std::span<const std::int64_t> counts) {
  int best = 0;
  for (std::size_t c = 1; c < counts.size(); ++c) {
    if (counts[c] > counts[static_cast<std::size_t>(best)]) best = static_cast<int>(c);
  }
  return best;
}

Forest TrainForest(const Dataset& data, const ForestParams& params) {
  if (data.num_rows() == 0) throw InputError("cannot train on an empty dataset");
  data.Validate();
  const std::size_t f = data.num_features();
  if (params.n_trees < 1) throw InputError("n_trees must be >= 1");
  if (params.max_depth < 1) throw InputError("max_depth must be >= 1");
  std::size_t m = params.features_per_split;
  if (m == 0) m = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(f))));
  if (m < 1 || m > f) throw InputError("features_per_split must lie in [1, f]");

  Forest forest;
  forest.feature_names = data.feature_names;
  forest.class_names = data.class_names;
  forest.params = params;
  forest.params.features_per_split = m;
  forest.trees.resize(params.n_trees);

  ParallelFor(params.n_trees, [&](std::size_t t) {
    std::seed_seq seq{static_cast<std::uint32_t>(params.seed),
                      static_cast<std::uint32_t>(params.seed >> 32),
                      static_cast<std::uint32_t>(t)};
    std::mt19937_64 rng(seq);
    std::vector<std::size_t> samples(data.num_rows());
    if (params.bootstrap) {
      std::uniform_int_distribution<std::size_t> draw(0, data.num_rows() - 1);
      for (auto& s : samples) s = draw(rng);
    } else {
      std::iota(samples.begin(), samples.end(), 0);
    }
    TreeBuilder builder(data, params, m, rng);
    forest.trees[t] = builder.Build(std::move(samples));
  });
  return forest;
}

int Predict(const Forest& forest, std::span<const double> row) {
  if (row.size() != forest.num_features()) {
    throw InputError("row has " + std::to_string(row.size()) +
                     " values, forest expects " +
                     std::to_string(forest.num_features()));
  }
  std::vector<std::int64_t> votes(forest.num_classes(), 0);
  for (const Tree& tree : forest.trees) {
    ++votes[static_cast<std::size_t>(
        ArgMax(tree.node(tree.LeafFor(row)).class_counts))];
  }
  return ArgMax(votes);
}

double Accuracy(const Forest& forest, const Dataset& data) {
  if (data.num_rows() == 0) return 0.0;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < data.num_rows(); ++i) {
    if (Predict(forest, data.row(i)) == data.labels[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(data.num_rows());
}

}  // namespace sig
