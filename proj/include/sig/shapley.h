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

#ifndef SIG_SHAPLEY_H_
#define SIG_SHAPLEY_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "sig/dataset.h"
#include "sig/forest.h"

namespace sig {

inline constexpr std::size_t kMaxExactPlayers = 20;

// Cooperative game over num_features players. `value` receives a coalition
// as a bit mask (player i is bit i).
struct ValueFunction {
  std::size_t num_features = 0;
  std::function<double(std::uint32_t)> value;
};

// Exact Shapley Interaction Index of `subset`:
//   sum over T in players \ S of (M - |T| - k)! |T|! / (M - k + 1)!
//     * sum over L in S of (-1)^(k - |L|) v(T u L)
// with k = |S|. For a pair this is the second-order discrete derivative.
// Throws InputError for an empty, repeated or out-of-range subset and
// CapacityError when M > kMaxExactPlayers.
double ShapleyInteraction(const ValueFunction& game, std::span<const int> subset);

// Interventional value of a forest: the average over background rows of the
// model score at a hybrid row taking `row` values on the subset and the
// background row's values elsewhere. Binary forests score the mean per-tree
// leaf probability of class 1; multiclass forests score the indicator that
// the forest predicts, at the hybrid row, the class it predicts at `row`.
class ForestGame {
 public:
  ForestGame(const Forest& forest, std::span<const double> row, const Dataset& background);

  std::size_t num_features() const { return row_.size(); }
  // present[j] != 0 means feature j takes the explained row's value.
  double Value(std::span<const char> present) const;
  double Value(std::span<const int> subset) const;
  // Coalitions as bit masks; only valid when num_features() <= 32.
  ValueFunction AsValueFunction() const;

 private:
  double Score(std::span<const double> hybrid) const;

  const Forest& forest_;
  std::vector<double> row_;
  const Dataset& background_;
  int target_class_ = 1;
  std::vector<std::vector<double>> leaf_p1_;  // per tree, per node
};

double ForestValue(const Forest& forest, std::span<const double> row,
                   std::span<const int> subset, const Dataset& background);

// Monte Carlo pair interaction: draws |T| uniformly from 0..M-2 (the SII
// weights put equal mass on every size) and T uniformly among subsets of
// that size, then averages the discrete derivative. Unbiased for the exact
// value.
double SampledPairInteraction(const ForestGame& game, int a, int b, std::size_t samples,
                              std::mt19937_64& rng);

}  // namespace sig

#endif  // SIG_SHAPLEY_H_
