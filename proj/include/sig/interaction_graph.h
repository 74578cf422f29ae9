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

#ifndef SIG_INTERACTION_GRAPH_H_
#define SIG_INTERACTION_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "sig/cluster.h"
#include "sig/rules.h"

namespace sig {

using FeatureId = int;
using EdgeKey = std::pair<FeatureId, FeatureId>;  // (src, dst)

// A rule's features in condition order, consecutive repeats collapsed.
struct FeaturePath {
  std::vector<FeatureId> features;
  int cluster_id = 0;
  std::int64_t multiplicity = 1;

  auto operator<=>(const FeaturePath&) const = default;
};

// Path of one rule (cluster 0, multiplicity 1). An empty rule gives an empty
// path.
FeaturePath ExtractTransitions(const DecisionRule& rule);

// Consecutive pairs of a path.
std::vector<EdgeKey> Transitions(const FeaturePath& path);

// Groups rule paths by (cluster, feature sequence). Empty paths are dropped.
// Output is sorted by (cluster, features).
std::vector<FeaturePath> ClusterPaths(std::span<const DecisionRule> rules,
                                      const ClusterAssignment& clusters);

enum class PairMode {
  kConsecutive,  // (p[i], p[i+1])
  kAllOrdered,   // (p[i], p[j]) for every i < j with p[i] != p[j]
};

struct GraphOptions {
  PairMode pair_mode = PairMode::kConsecutive;
  // Pair {u,v} is bidirectional when both directions exist and
  // min(w_uv, w_vu) / max(w_uv, w_vu) >= this ratio. Values above 1 disable it.
  double bidirectional_ratio = 0.5;
};

struct InteractionGraph {
  std::set<FeatureId> nodes;
  std::map<EdgeKey, std::int64_t> edges;
  std::vector<FeaturePath> paths;  // sorted
  std::set<EdgeKey> bidirectional_pairs;  // stored as (min, max)

  bool empty() const { return edges.empty(); }
  bool IsBidirectional(FeatureId u, FeatureId v) const {
    return bidirectional_pairs.count({std::min(u, v), std::max(u, v)}) > 0;
  }
};

// Edge weight = multiplicity-weighted count of the pair across all paths.
// No transitions at all yields an empty (flagged) graph rather than an error.
InteractionGraph BuildGraph(std::span<const FeaturePath> paths,
                            const GraphOptions& options = {});

}  // namespace sig

#endif  // SIG_INTERACTION_GRAPH_H_
