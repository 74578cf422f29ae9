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

#include "sig/cluster.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sig/error.h"
#include "sig/parallel.h"

namespace sig {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

double SparseCosineDistance(std::span<const TfIdfMatrix::Entry> a, double norm_a,
                            std::span<const TfIdfMatrix::Entry> b, double norm_b) {
  if (std::equal(a.begin(), a.end(), b.begin(), b.end())) return 0.0;
  if (norm_a == 0.0 || norm_b == 0.0) return 1.0;
  double dot = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (b[j].first < a[i].first) {
      ++j;
    } else {
      dot += a[i++].second * b[j++].second;
    }
  }
  return std::clamp(1.0 - dot / (norm_a * norm_b), 0.0, 2.0);
}

// Condensed upper-triangular distance storage.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * (n - 1) / 2) {}
  double& operator()(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return d_[i * n_ - i * (i + 1) / 2 + (j - i - 1)];
  }

 private:
  std::size_t n_;
  std::vector<double> d_;
};

}  // namespace

double CosineDistance(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw InputError("cosine distance needs equal lengths");
  double dot = 0.0;
  double uu = 0.0;
  double vv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (uu == 0.0 || vv == 0.0) return 1.0;
  if (std::equal(u.begin(), u.end(), v.begin())) return 0.0;
  return std::clamp(1.0 - dot / (std::sqrt(uu) * std::sqrt(vv)), 0.0, 2.0);
}

std::size_t ChooseClusterCount(std::size_t num_features, std::size_t num_rows,
                               std::size_t num_rules) {
  if (num_features < 1 || num_rows < 1) throw InputError("f and N must be >= 1");
  const auto k = static_cast<std::size_t>(
      std::floor(std::sqrt(static_cast<double>(num_features + num_rows)) + 0.5));
  if (num_rules < 2) return num_rules;
  return std::clamp<std::size_t>(k, 2, num_rules);
}

ClusterAssignment AgglomerativeCluster(const TfIdfMatrix& matrix, std::size_t k) {
  const std::size_t n = matrix.rows();
  if (k < 1 || k > n) {
    throw InputError("cluster count " + std::to_string(k) + " outside [1, " +
                     std::to_string(n) + "]");
  }
  ClusterAssignment out;
  out.k = k;
  if (n == 1) {
    out.labels = {0};
    return out;
  }

  std::vector<double> norms(n);
  for (std::size_t i = 0; i < n; ++i) norms[i] = matrix.RowNorm(i);
  DistanceMatrix dist(n);
  ParallelFor(n, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dist(i, j) = SparseCosineDistance(matrix.row(i), norms[i], matrix.row(j), norms[j]);
    }
  });

  std::vector<bool> active(n, true);
  std::vector<std::size_t> size(n, 1);
  std::vector<std::size_t> parent(n);  // row -> slot it was merged into
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::vector<std::size_t> nn(n, kNone);
  std::vector<double> nn_dist(n, std::numeric_limits<double>::infinity());

  // Nearest active neighbour with a larger index; ties to the smallest index.
  auto refresh = [&](std::size_t a) {
    nn[a] = kNone;
    nn_dist[a] = std::numeric_limits<double>::infinity();
    for (std::size_t b = a + 1; b < n; ++b) {
      if (active[b] && dist(a, b) < nn_dist[a]) {
        nn[a] = b;
        nn_dist[a] = dist(a, b);
      }
    }
  };
  for (std::size_t a = 0; a < n; ++a) refresh(a);

  for (std::size_t clusters = n; clusters > k; --clusters) {
    std::size_t i = kNone;
    for (std::size_t a = 0; a < n; ++a) {
      if (active[a] && nn[a] != kNone && (i == kNone || nn_dist[a] < nn_dist[i])) i = a;
    }
    if (i == kNone) throw InvariantError("no mergeable cluster pair");
    const std::size_t j = nn[i];
    out.merge_distances.push_back(nn_dist[i]);

    const double wi = static_cast<double>(size[i]);
    const double wj = static_cast<double>(size[j]);
    for (std::size_t x = 0; x < n; ++x) {
      if (!active[x] || x == i || x == j) continue;
      dist(i, x) = (wi * dist(i, x) + wj * dist(j, x)) / (wi + wj);
    }
    active[j] = false;
    size[i] += size[j];
    parent[j] = i;

    for (std::size_t a = 0; a < n; ++a) {
      if (!active[a]) continue;
      if (a == i || nn[a] == i || nn[a] == j) {
        refresh(a);
      } else if (a < i && (dist(a, i) < nn_dist[a] ||
                           (dist(a, i) == nn_dist[a] && i < nn[a]))) {
        nn[a] = i;
        nn_dist[a] = dist(a, i);
      }
    }
  }

  auto find = [&](std::size_t r) {
    while (parent[r] != r) r = parent[r];
    return r;
  };
  std::vector<int> slot_label(n, -1);
  int next = 0;
  out.labels.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t s = find(r);
    if (slot_label[s] < 0) slot_label[s] = next++;
    out.labels[r] = slot_label[s];
  }
  return out;
}

std::string FormatClusterDump(const ClusterAssignment& clusters,
                              std::span<const std::string> rule_texts) {
  std::string out;
  for (std::size_t c = 0; c < clusters.k; ++c) {
    for (std::size_t r = 0; r < clusters.labels.size(); ++r) {
      if (static_cast<std::size_t>(clusters.labels[r]) == c) {
        out += "cluster " + std::to_string(c) + ": " + rule_texts[r] + "\n";
      }
    }
  }
  return out;
}

}  // namespace sig
