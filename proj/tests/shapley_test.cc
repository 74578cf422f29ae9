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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sig/dataset.h"
#include "sig/error.h"

namespace sig {
namespace {

ValueFunction Table(std::size_t m, std::vector<double> values) {
  return {m, [values = std::move(values)](std::uint32_t mask) { return values[mask]; }};
}

ValueFunction RandomGame(std::size_t m, std::mt19937_64& rng) {
  std::vector<double> values(std::size_t{1} << m);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto& v : values) v = u(rng);
  return Table(m, std::move(values));
}

std::uint32_t MaskOf(std::span<const int> s) {
  std::uint32_t m = 0;
  for (const int i : s) m |= 1u << i;
  return m;
}

// Treats S as one merged player and walks every ordering of the remaining
// players plus that block; T is whatever precedes the block.
double PermutationOracle(const ValueFunction& g, std::vector<int> s) {
  const std::uint32_t smask = MaskOf(s);
  std::vector<int> players;
  for (int i = 0; i < static_cast<int>(g.num_features); ++i) {
    if (!(smask >> i & 1)) players.push_back(i);
  }
  players.push_back(-1);  // the block
  std::sort(players.begin(), players.end());
  double sum = 0.0;
  std::size_t count = 0;
  do {
    std::uint32_t t = 0;
    for (const int p : players) {
      if (p == -1) break;
      t |= 1u << p;
    }
    double delta = 0.0;
    for (std::uint32_t l = smask;; l = (l - 1) & smask) {
      const int sign = (std::popcount(smask) - std::popcount(l)) % 2 ? -1 : 1;
      delta += sign * g.value(t | l);
      if (l == 0) break;
    }
    sum += delta;
    ++count;
  } while (std::next_permutation(players.begin(), players.end()));
  return sum / static_cast<double>(count);
}

TEST(ShapleyInteractionTest, PureInteractionIsOne) {
  const auto g = Table(2, {0, 0, 0, 1});
  const std::vector<int> s = {0, 1};
  EXPECT_EQ(ShapleyInteraction(g, s), 1.0);
}

TEST(ShapleyInteractionTest, AdditiveGameHasNoInteraction) {
  const std::vector<double> c = {0.5, -2.0, 3.0, 1.25, 7.0};
  ValueFunction g{5, [&](std::uint32_t mask) {
                    double v = 0.0;
                    for (std::size_t i = 0; i < c.size(); ++i) {
                      if (mask >> i & 1) v += c[i];
                    }
                    return v;
                  }};
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      const std::vector<int> s = {a, b};
      EXPECT_NEAR(ShapleyInteraction(g, s), 0.0, 1e-12);
    }
  }
}

TEST(ShapleyInteractionTest, SingletonIsShapleyValue) {
  // Shapley values of a random game sum to v(N) - v(empty).
  std::mt19937_64 rng(4);
  const auto g = RandomGame(5, rng);
  double total = 0.0;
  for (int i = 0; i < 5; ++i) {
    const std::vector<int> s = {i};
    total += ShapleyInteraction(g, s);
  }
  EXPECT_NEAR(total, g.value(31) - g.value(0), 1e-12);
}

TEST(ShapleyInteractionTest, MatchesPermutationOracle) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = RandomGame(4, rng);
    for (const auto& s : std::vector<std::vector<int>>{{0, 1}, {1, 3}, {0, 2, 3}, {2}}) {
      EXPECT_NEAR(ShapleyInteraction(g, s), PermutationOracle(g, s), 1e-12);
    }
  }
}

TEST(ShapleyInteractionTest, RejectsBadSubsets) {
  const auto g = Table(2, {0, 0, 0, 1});
  EXPECT_THROW(ShapleyInteraction(g, std::vector<int>{}), InputError);
  EXPECT_THROW(ShapleyInteraction(g, std::vector<int>{0, 0}), InputError);
  EXPECT_THROW(ShapleyInteraction(g, std::vector<int>{2}), InputError);
  ValueFunction big{21, [](std::uint32_t) { return 0.0; }};
  EXPECT_THROW(ShapleyInteraction(big, std::vector<int>{0, 1}), CapacityError);
}

Forest StumpForest() {
  Forest f;
  f.feature_names = {"x", "y"};
  f.class_names = {"a", "b"};
  Tree t;
  t.nodes = {TreeNode::Split(0, 0.5, 1, 2), TreeNode::Leaf({3, 1}), TreeNode::Leaf({1, 3})};
  f.trees.push_back(t);
  return f;
}

Dataset TwoRowBackground() {
  Dataset bg;
  bg.feature_names = {"x", "y"};
  bg.class_names = {"a", "b"};
  bg.values = {0.2, 5.0, 0.7, 5.0};
  bg.labels = {0, 1};
  return bg;
}

TEST(ForestValueTest, StumpHandComputed) {
  const Forest f = StumpForest();
  const Dataset bg = TwoRowBackground();
  const std::vector<double> row = {0.9, 0.0};
  EXPECT_DOUBLE_EQ(ForestValue(f, row, std::vector<int>{}, bg), 0.5);
  EXPECT_DOUBLE_EQ(ForestValue(f, row, std::vector<int>{0}, bg), 0.75);
  EXPECT_DOUBLE_EQ(ForestValue(f, row, std::vector<int>{1}, bg), 0.5);
  EXPECT_DOUBLE_EQ(ForestValue(f, row, std::vector<int>{0, 1}, bg), 0.75);
  EXPECT_THROW(ForestValue(f, row, std::vector<int>{2}, bg), InputError);
}

TEST(ForestValueTest, FullCoalitionIgnoresBackground) {
  const Dataset d = MakeSyntheticDataset(150, 5, 2);
  ForestParams p;
  p.n_trees = 5;
  const Forest f = TrainForest(d, p);
  const std::vector<int> all = {0, 1, 2, 3, 4};
  const std::vector<std::size_t> rows_a = {0, 1, 2};
  const std::vector<std::size_t> rows_b = {50, 60};
  const double va = ForestValue(f, d.row(7), all, d.Subset(rows_a));
  const double vb = ForestValue(f, d.row(7), all, d.Subset(rows_b));
  EXPECT_DOUBLE_EQ(va, vb);
}

TEST(ForestValueTest, MulticlassIndicator) {
  Forest f;
  f.feature_names = {"x"};
  f.class_names = {"a", "b", "c"};
  Tree t;
  t.nodes = {TreeNode::Split(0, 0.5, 1, 2), TreeNode::Leaf({0, 0, 4}),
             TreeNode::Leaf({5, 0, 0})};
  f.trees.push_back(t);
  Dataset bg;
  bg.feature_names = {"x"};
  bg.class_names = f.class_names;
  bg.values = {0.1, 0.9, 0.2, 0.3};
  bg.labels = {0, 0, 0, 0};
  const std::vector<double> row = {0.0};
  EXPECT_DOUBLE_EQ(ForestValue(f, row, std::vector<int>{}, bg), 0.75);
  EXPECT_DOUBLE_EQ(ForestValue(f, row, std::vector<int>{0}, bg), 1.0);
}

TEST(SampledPairInteractionTest, ConvergesToExact) {
  const Dataset d = MakeSyntheticDataset(200, 6, 13);
  ForestParams p;
  p.n_trees = 5;
  p.max_depth = 4;
  const Forest f = TrainForest(d, p);
  const std::vector<std::size_t> bg_rows = {1, 2, 3, 4, 5, 6};
  const Dataset bg = d.Subset(bg_rows);
  const ForestGame game(f, d.row(0), bg);
  const auto vf = game.AsValueFunction();
  std::mt19937_64 rng(1);
  const double exact = ShapleyInteraction(vf, std::vector<int>{0, 1});
  const double approx = SampledPairInteraction(game, 0, 1, 40000, rng);
  EXPECT_NEAR(approx, exact, 0.01);
  EXPECT_THROW(SampledPairInteraction(game, 1, 1, 10, rng), InputError);
}

}  // namespace
}  // namespace sig
