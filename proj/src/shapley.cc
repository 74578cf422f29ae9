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

#include "sig/shapley.h"

#include <algorithm>
#include <bit>
#include <numeric>

#include "sig/error.h"

namespace sig {

double ShapleyInteraction(const ValueFunction& game, std::span<const int> subset) {
  const std::size_t m = game.num_features;
  if (m > kMaxExactPlayers) {
    throw CapacityError("exact interaction index limited to " +
                        std::to_string(kMaxExactPlayers) + " features, got " +
                        std::to_string(m));
  }
  if (subset.empty()) throw InputError("interaction subset must be non-empty");
  std::uint32_t s_mask = 0;
  for (const int f : subset) {
    if (f < 0 || static_cast<std::size_t>(f) >= m) {
      throw InputError("interaction subset feature " + std::to_string(f) + " out of range");
    }
    if (s_mask & (1u << f)) throw InputError("interaction subset repeats a feature");
    s_mask |= 1u << f;
  }
  const std::size_t k = subset.size();

  // weight[t] = (m - t - k)! t! / (m - k + 1)!
  std::vector<double> factorial(m + 2, 1.0);
  for (std::size_t i = 1; i < factorial.size(); ++i) {
    factorial[i] = factorial[i - 1] * static_cast<double>(i);
  }
  std::vector<double> weight(m - k + 1);
  for (std::size_t t = 0; t + k <= m; ++t) {
    weight[t] = factorial[m - t - k] * factorial[t] / factorial[m - k + 1];
  }

  const std::uint32_t all = m == 32 ? ~0u : (1u << m) - 1;
  const std::uint32_t rest = all & ~s_mask;
  double total = 0.0;
  // Enumerate T over submasks of `rest`, including the empty set.
  for (std::uint32_t t = rest;; t = (t - 1) & rest) {
    double derivative = 0.0;
    for (std::uint32_t l = s_mask;; l = (l - 1) & s_mask) {
      const auto missing = k - static_cast<std::size_t>(std::popcount(l));
      derivative += (missing % 2 == 0 ? 1.0 : -1.0) * game.value(t | l);
      if (l == 0) break;
    }
    total += weight[static_cast<std::size_t>(std::popcount(t))] * derivative;
    if (t == 0) break;
  }
  return total;
}

ForestGame::ForestGame(const Forest& forest, std::span<const double> row,
                       const Dataset& background)
    : forest_(forest), row_(row.begin(), row.end()), background_(background) {
  if (row.size() != forest.num_features()) throw InputError("row length mismatch");
  if (background.num_rows() == 0) throw InputError("background must be non-empty");
  if (background.num_features() != forest.num_features()) {
    throw InputError("background schema does not match the forest");
  }
  if (forest.num_classes() > 2) {
    target_class_ = Predict(forest, row);
    return;
  }
  if (forest.num_classes() < 2) return;
  for (const Tree& tree : forest.trees) {
    auto& probs = leaf_p1_.emplace_back(tree.nodes.size(), 0.0);
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
      const auto& counts = tree.nodes[i].class_counts;
      const auto total = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
      if (tree.nodes[i].is_leaf() && total > 0) {
        probs[i] = static_cast<double>(counts[1]) / static_cast<double>(total);
      }
    }
  }
}

double ForestGame::Score(std::span<const double> hybrid) const {
  if (forest_.num_classes() > 2) {
    return Predict(forest_, hybrid) == target_class_ ? 1.0 : 0.0;
  }
  if (forest_.num_classes() < 2) return 0.0;
  double sum = 0.0;
  for (std::size_t t = 0; t < forest_.trees.size(); ++t) {
    const Tree& tree = forest_.trees[t];
    sum += leaf_p1_[t][static_cast<std::size_t>(tree.LeafFor(hybrid))];
  }
  return sum / static_cast<double>(forest_.trees.size());
}

double ForestGame::Value(std::span<const char> present) const {
  double sum = 0.0;
  if (!leaf_p1_.empty()) {
    // Binary case: walk each tree on the mixed row without materializing it.
    for (std::size_t b = 0; b < background_.num_rows(); ++b) {
      const auto bg = background_.row(b);
      double score = 0.0;
      for (std::size_t t = 0; t < forest_.trees.size(); ++t) {
        const Tree& tree = forest_.trees[t];
        NodeId id = tree.root;
        while (!tree.node(id).is_leaf()) {
          const TreeNode& n = tree.node(id);
          const auto j = static_cast<std::size_t>(n.feature);
          id = (present[j] ? row_[j] : bg[j]) <= n.threshold ? n.left : n.right;
        }
        score += leaf_p1_[t][static_cast<std::size_t>(id)];
      }
      sum += score / static_cast<double>(forest_.trees.size());
    }
    return sum / static_cast<double>(background_.num_rows());
  }
  std::vector<double> hybrid(row_.size());
  for (std::size_t b = 0; b < background_.num_rows(); ++b) {
    const auto bg = background_.row(b);
    for (std::size_t j = 0; j < hybrid.size(); ++j) hybrid[j] = present[j] ? row_[j] : bg[j];
    sum += Score(hybrid);
  }
  return sum / static_cast<double>(background_.num_rows());
}

double ForestGame::Value(std::span<const int> subset) const {
  std::vector<char> present(row_.size(), 0);
  for (const int f : subset) {
    if (f < 0 || static_cast<std::size_t>(f) >= row_.size()) {
      throw InputError("subset feature " + std::to_string(f) + " out of range");
    }
    present[static_cast<std::size_t>(f)] = 1;
  }
  return Value(present);
}

ValueFunction ForestGame::AsValueFunction() const {
  if (num_features() > 32) throw CapacityError("bit-mask coalitions need <= 32 features");
  return {num_features(), [this](std::uint32_t mask) {
            std::vector<char> present(num_features());
            for (std::size_t j = 0; j < present.size(); ++j) present[j] = (mask >> j) & 1u;
            return Value(present);
          }};
}

double ForestValue(const Forest& forest, std::span<const double> row,
                   std::span<const int> subset, const Dataset& background) {
  return ForestGame(forest, row, background).Value(subset);
}

double SampledPairInteraction(const ForestGame& game, int a, int b, std::size_t samples,
                              std::mt19937_64& rng) {
  const std::size_t m = game.num_features();
  if (a == b || a < 0 || b < 0 || static_cast<std::size_t>(a) >= m ||
      static_cast<std::size_t>(b) >= m) {
    throw InputError("invalid feature pair");
  }
  if (samples == 0) throw InputError("need at least one sample");
  std::vector<int> others;
  for (std::size_t j = 0; j < m; ++j) {
    if (static_cast<int>(j) != a && static_cast<int>(j) != b) others.push_back(static_cast<int>(j));
  }
  std::uniform_int_distribution<std::size_t> size_dist(0, others.size());
  std::vector<char> present(m, 0);
  double sum = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t t = size_dist(rng);
    // Partial Fisher-Yates: the first t entries form a uniform t-subset.
    for (std::size_t i = 0; i < t; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, others.size() - 1);
      std::swap(others[i], others[pick(rng)]);
    }
    std::fill(present.begin(), present.end(), 0);
    for (std::size_t i = 0; i < t; ++i) present[static_cast<std::size_t>(others[i])] = 1;
    const double v_t = game.Value(present);
    present[static_cast<std::size_t>(a)] = 1;
    const double v_ta = game.Value(present);
    present[static_cast<std::size_t>(b)] = 1;
    const double v_tab = game.Value(present);
    present[static_cast<std::size_t>(a)] = 0;
    const double v_tb = game.Value(present);
    sum += v_tab - v_ta - v_tb + v_t;
  }
  return sum / static_cast<double>(samples);
}

}  // namespace sig
