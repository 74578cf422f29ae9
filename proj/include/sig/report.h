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

#ifndef SIG_REPORT_H_
#define SIG_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sig/interaction_graph.h"
#include "sig/sig_program.h"

namespace sig {

inline constexpr std::size_t kMaxDfis = 64;

// A decision-feature interaction: a maximal source-to-sink path of the
// optimized graph. Each segment is one node of the contracted graph; a
// segment with several features is a bidirectional group, rendered "f3 ↔ f4".
struct Dfi {
  std::size_t id = 0;  // 1-based
  std::vector<std::vector<FeatureId>> path;
  std::vector<FeatureId> features_used;  // ascending

  bool operator==(const Dfi&) const = default;
};

struct DfiList {
  std::vector<Dfi> dfis;
  bool truncated = false;
};

// Contracts merged pairs, then lists every path from a node without incoming
// edges to a node without outgoing edges, depth-first with successors in
// ascending id order. Stops after `cap` paths and sets `truncated`.
DfiList EnumerateDfis(std::span<const ProgramEdge> edges, const std::set<EdgeKey>& merged,
                      std::size_t cap = kMaxDfis);
DfiList EnumerateDfis(const SigProgram& program, const SigSolution& solution,
                      std::size_t cap = kMaxDfis);

struct ReportEdge {
  FeatureId src = 0;
  FeatureId dst = 0;
  std::int64_t weight = 0;
  bool bidirectional = false;

  bool operator==(const ReportEdge&) const = default;
};

struct LegendEntry {
  FeatureId id = 0;   // column index in the dataset
  std::string name;

  bool operator==(const LegendEntry&) const = default;
};

struct SigReport {
  // Features present in the optimized graph, ascending id. Entry i is
  // labelled "f<i+1>" in every rendering.
  std::vector<LegendEntry> legend;
  std::vector<ReportEdge> edges;  // sorted by (src, dst)
  std::vector<Dfi> dfis;
  bool truncated = false;

  std::string Label(FeatureId id) const;
  bool operator==(const SigReport&) const = default;
};

SigReport MakeReport(const SigProgram& program, const SigSolution& solution,
                     std::span<const std::string> feature_names, std::size_t cap = kMaxDfis);

// Rows follow DFI order, columns follow legend order.
std::vector<std::vector<bool>> UsageTable(std::span<const Dfi> dfis,
                                          std::span<const LegendEntry> legend);

// Number of DFIs each legend feature appears in (column sums of UsageTable).
std::vector<std::size_t> FeatureDfiCounts(const SigReport& report);

std::string ExportDot(const SigReport& report);
std::string ExportJson(const SigReport& report);
SigReport ImportReportJson(std::string_view document);
// Legend, feature usage per DFI ("x" marks), hierarchical interactions.
std::string ExportMarkdown(const SigReport& report);

// "f8 → f1 → f14"
std::string FormatDfiPath(const SigReport& report, const Dfi& dfi);

}  // namespace sig

#endif  // SIG_REPORT_H_
