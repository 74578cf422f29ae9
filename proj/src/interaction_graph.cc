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

#include "sig/interaction_graph.h"

#include <algorithm>

namespace sig {

FeaturePath ExtractTransitions(const DecisionRule& rule) {
  FeaturePath path;
  for (const Condition& c : rule.conditions) {
    if (path.features.empty() || path.features.back() != c.feature) {
      path.features.push_back(c.feature);
    }
  }
  return path;
}

std::vector<EdgeKey> Transitions(const FeaturePath& path) {
  std::vector<EdgeKey> out;
  for (std::size_t i = 0; i + 1 < path.features.size(); ++i) {
    out.emplace_back(path.features[i], path.features[i + 1]);
  }
  return out;
}

std::vector<FeaturePath> ClusterPaths(std::span<const DecisionRule> rules,
                                      const ClusterAssignment& clusters) {
  std::map<std::pair<int, std::vector<FeatureId>>, std::int64_t> counts;
  for (std::size_t r = 0; r < rules.size(); ++r) {
    FeaturePath p = ExtractTransitions(rules[r]);
    if (p.features.empty()) continue;
    ++counts[{clusters.labels[r], std::move(p.features)}];
  }
  std::vector<FeaturePath> out;
  out.reserve(counts.size());
  for (auto& [key, m] : counts) out.push_back({key.second, key.first, m});
  return out;
}

InteractionGraph BuildGraph(std::span<const FeaturePath> paths,
                            const GraphOptions& options) {
  InteractionGraph g;
  g.paths.assign(paths.begin(), paths.end());
  std::sort(g.paths.begin(), g.paths.end());
  for (const FeaturePath& p : g.paths) {
    g.nodes.insert(p.features.begin(), p.features.end());
    const auto& f = p.features;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      if (options.pair_mode == PairMode::kConsecutive) {
        if (f[i] != f[i + 1]) g.edges[{f[i], f[i + 1]}] += p.multiplicity;
        continue;
      }
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        if (f[i] != f[j]) g.edges[{f[i], f[j]}] += p.multiplicity;
      }
    }
  }
  for (const auto& [key, w] : g.edges) {
    const auto [u, v] = key;
    if (u > v) continue;
    const auto back = g.edges.find({v, u});
    if (back == g.edges.end()) continue;
    const double lo = static_cast<double>(std::min(w, back->second));
    const double hi = static_cast<double>(std::max(w, back->second));
    if (lo / hi >= options.bidirectional_ratio) g.bidirectional_pairs.insert({u, v});
  }
  return g;
}

}  // namespace sig
