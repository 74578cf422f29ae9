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

#ifndef SIG_CLUSTER_H_
#define SIG_CLUSTER_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sig/tfidf.h"

namespace sig {

// 1 - u.v / (|u||v|), clamped to [0, 2]. Distance to a zero vector is 1.
double CosineDistance(std::span<const double> u, std::span<const double> v);

// round(sqrt(f + N)) with halves rounded up, clamped to [2, num_rules]
// (or to num_rules when fewer than two rules exist).
std::size_t ChooseClusterCount(std::size_t num_features, std::size_t num_rows,
                               std::size_t num_rules);

struct ClusterAssignment {
  std::vector<int> labels;  // per rule, renumbered by first occurrence
  std::size_t k = 0;
  std::vector<double> merge_distances;  // linkage distance of each merge, in order
};

// Bottom-up average-linkage clustering on cosine distance, stopping at k
// clusters. Exactly duplicated rows are at distance 0. Ties are broken by the
// lexicographically smallest pair of cluster representatives, a cluster's
// representative being its smallest row index.
ClusterAssignment AgglomerativeCluster(const TfIdfMatrix& matrix, std::size_t k);

// "cluster <id>: <text>" per rule, grouped by cluster id.
std::string FormatClusterDump(const ClusterAssignment& clusters,
                              std::span<const std::string> rule_texts);

}  // namespace sig

#endif  // SIG_CLUSTER_H_
