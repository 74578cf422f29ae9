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

#include "sig/report.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "json.hpp"
#include "sig/error.h"

namespace sig {
namespace {

using nlohmann::json;

std::string Escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

class PathEnumerator {
 public:
  PathEnumerator(std::span<const ProgramEdge> edges, const std::set<EdgeKey>& merged,
                 std::size_t cap)
      : cap_(cap) {
    std::set<EdgeKey> present;
    for (const auto& e : edges) {
      present.insert({e.src, e.dst});
      rep_[e.src] = e.src;
      rep_[e.dst] = e.dst;
    }
    auto is_merge = [&](FeatureId u, FeatureId v) {
      return merged.count({std::min(u, v), std::max(u, v)}) > 0 && present.count({v, u}) > 0;
    };
    for (const auto& e : edges) {
      if (is_merge(e.src, e.dst)) Unite(e.src, e.dst);
    }
    for (auto& [f, r] : rep_) members_[Find(f)].push_back(f);
    for (auto& [r, m] : members_) std::sort(m.begin(), m.end());
    for (const auto& e : edges) {
      if (is_merge(e.src, e.dst)) continue;
      const FeatureId a = Find(e.src);
      const FeatureId b = Find(e.dst);
      if (a != b) succ_[a].insert(b), has_in_.insert(b);
    }
  }

  DfiList Run() {
    for (const auto& [r, m] : members_) {
      if (has_in_.count(r) == 0) Walk(r);
      if (out_.truncated) break;
    }
    return std::move(out_);
  }

 private:
  FeatureId Find(FeatureId f) {
    while (rep_[f] != f) f = rep_[f];
    return f;
  }
  void Unite(FeatureId a, FeatureId b) {
    a = Find(a);
    b = Find(b);
    if (a != b) rep_[std::max(a, b)] = std::min(a, b);
  }

  void Walk(FeatureId node) {
    if (out_.truncated) return;
    stack_.push_back(node);
    bool extended = false;
    if (const auto it = succ_.find(node); it != succ_.end()) {
      for (const FeatureId next : it->second) {
        // Simple paths only, so a cyclic selection cannot loop forever.
        if (std::find(stack_.begin(), stack_.end(), next) != stack_.end()) continue;
        extended = true;
        Walk(next);
      }
    }
    if (!extended) Emit();
    stack_.pop_back();
  }

  void Emit() {
    if (out_.dfis.size() >= cap_) {
      out_.truncated = true;
      return;
    }
    Dfi dfi;
    dfi.id = out_.dfis.size() + 1;
    for (const FeatureId r : stack_) {
      dfi.path.push_back(members_[r]);
      dfi.features_used.insert(dfi.features_used.end(), members_[r].begin(), members_[r].end());
    }
    std::sort(dfi.features_used.begin(), dfi.features_used.end());
    dfi.features_used.erase(std::unique(dfi.features_used.begin(), dfi.features_used.end()),
                            dfi.features_used.end());
    out_.dfis.push_back(std::move(dfi));
  }

  std::size_t cap_;
  std::map<FeatureId, FeatureId> rep_;
  std::map<FeatureId, std::vector<FeatureId>> members_;
  std::map<FeatureId, std::set<FeatureId>> succ_;
  std::set<FeatureId> has_in_;
  std::vector<FeatureId> stack_;
  DfiList out_;
};

}  // namespace

DfiList EnumerateDfis(std::span<const ProgramEdge> edges, const std::set<EdgeKey>& merged,
                      std::size_t cap) {
  return PathEnumerator(edges, merged, cap).Run();
}

DfiList EnumerateDfis(const SigProgram& program, const SigSolution& solution,
                      std::size_t cap) {
  const Selection s = solution.mask();
  return EnumerateDfis(program.Edges(s), program.MergedPairs(s), cap);
}

std::string SigReport::Label(FeatureId id) const {
  const auto it = std::find_if(legend.begin(), legend.end(),
                               [&](const LegendEntry& e) { return e.id == id; });
  if (it == legend.end()) throw InvariantError("feature " + std::to_string(id) + " not in legend");
  return "f" + std::to_string(it - legend.begin() + 1);
}

SigReport MakeReport(const SigProgram& program, const SigSolution& solution,
                     std::span<const std::string> feature_names, std::size_t cap) {
  SigReport report;
  const Selection s = solution.mask();
  const auto merged = program.MergedPairs(s);
  std::set<FeatureId> used;
  for (const auto& e : program.Edges(s)) {
    const bool bidir = merged.count({std::min(e.src, e.dst), std::max(e.src, e.dst)}) > 0;
    report.edges.push_back({e.src, e.dst, static_cast<std::int64_t>(e.weight), bidir});
    used.insert(e.src);
    used.insert(e.dst);
  }
  for (const FeatureId f : used) {
    if (f < 0 || static_cast<std::size_t>(f) >= feature_names.size()) {
      throw InputError("feature id " + std::to_string(f) + " has no name");
    }
    report.legend.push_back({f, feature_names[static_cast<std::size_t>(f)]});
  }
  DfiList list = EnumerateDfis(program, solution, cap);
  report.dfis = std::move(list.dfis);
  report.truncated = list.truncated;
  return report;
}

std::vector<std::vector<bool>> UsageTable(std::span<const Dfi> dfis,
                                          std::span<const LegendEntry> legend) {
  std::vector<std::vector<bool>> table;
  for (const Dfi& dfi : dfis) {
    std::vector<bool> row(legend.size(), false);
    for (std::size_t c = 0; c < legend.size(); ++c) {
      row[c] = std::binary_search(dfi.features_used.begin(), dfi.features_used.end(),
                                  legend[c].id);
    }
    table.push_back(std::move(row));
  }
  return table;
}

std::vector<std::size_t> FeatureDfiCounts(const SigReport& report) {
  std::vector<std::size_t> counts(report.legend.size(), 0);
  for (const auto& row : UsageTable(report.dfis, report.legend)) {
    for (std::size_t c = 0; c < row.size(); ++c) counts[c] += row[c] ? 1 : 0;
  }
  return counts;
}

std::string FormatDfiPath(const SigReport& report, const Dfi& dfi) {
  std::string out;
  for (std::size_t i = 0; i < dfi.path.size(); ++i) {
    if (i > 0) out += " → ";
    for (std::size_t j = 0; j < dfi.path[i].size(); ++j) {
      if (j > 0) out += " ↔ ";
      out += report.Label(dfi.path[i][j]);
    }
  }
  return out;
}

std::string ExportDot(const SigReport& report) {
  std::string out = "digraph SIG {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < report.legend.size(); ++i) {
    const std::string label = "f" + std::to_string(i + 1);
    out += "  " + label + " [label=\"" + label + ": " + Escape(report.legend[i].name) + "\"];\n";
  }
  std::map<EdgeKey, std::int64_t> weight;
  for (const auto& e : report.edges) weight[{e.src, e.dst}] = e.weight;
  for (const auto& e : report.edges) {
    if (e.bidirectional) {
      if (e.src > e.dst) continue;
      out += "  " + report.Label(e.src) + " -> " + report.Label(e.dst) + " [label=\"" +
             std::to_string(e.weight) + "/" + std::to_string(weight[{e.dst, e.src}]) +
             "\", dir=both];\n";
    } else {
      out += "  " + report.Label(e.src) + " -> " + report.Label(e.dst) + " [label=\"" +
             std::to_string(e.weight) + "\"];\n";
    }
  }
  return out + "}\n";
}

std::string ExportJson(const SigReport& report) {
  json doc;
  doc["legend"] = json::array();
  for (std::size_t i = 0; i < report.legend.size(); ++i) {
    doc["legend"].push_back({{"label", "f" + std::to_string(i + 1)},
                             {"id", report.legend[i].id},
                             {"name", report.legend[i].name}});
  }
  doc["edges"] = json::array();
  for (const auto& e : report.edges) {
    doc["edges"].push_back({{"src", e.src},
                            {"dst", e.dst},
                            {"weight", e.weight},
                            {"bidirectional", e.bidirectional}});
  }
  doc["dfis"] = json::array();
  for (const auto& d : report.dfis) {
    doc["dfis"].push_back({{"id", d.id}, {"path", d.path}, {"features", d.features_used}});
  }
  doc["usage_table"] = json::array();
  for (const auto& row : UsageTable(report.dfis, report.legend)) {
    doc["usage_table"].push_back(row);
  }
  doc["truncated"] = report.truncated;
  return doc.dump(2) + "\n";
}

SigReport ImportReportJson(std::string_view document) {
  SigReport report;
  try {
    const json doc = json::parse(document);
    for (const auto& l : doc.at("legend")) {
      report.legend.push_back({l.at("id").get<FeatureId>(), l.at("name").get<std::string>()});
    }
    for (const auto& e : doc.at("edges")) {
      report.edges.push_back({e.at("src").get<FeatureId>(), e.at("dst").get<FeatureId>(),
                              e.at("weight").get<std::int64_t>(),
                              e.at("bidirectional").get<bool>()});
    }
    for (const auto& d : doc.at("dfis")) {
      report.dfis.push_back({d.at("id").get<std::size_t>(),
                             d.at("path").get<std::vector<std::vector<FeatureId>>>(),
                             d.at("features").get<std::vector<FeatureId>>()});
    }
    report.truncated = doc.value("truncated", false);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what(), e.byte);
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed report document: ") + e.what());
  }
  return report;
}

std::string ExportMarkdown(const SigReport& report) {
  std::string out = "## Feature legend\n\n| Label | Feature |\n|---|---|\n";
  for (std::size_t i = 0; i < report.legend.size(); ++i) {
    out += "| f" + std::to_string(i + 1) + " | " + report.legend[i].name + " |\n";
  }
  out += "\n## Feature usage per DFI\n\n| DFI |";
  for (std::size_t i = 0; i < report.legend.size(); ++i) out += " f" + std::to_string(i + 1) + " |";
  out += "\n|---|";
  for (std::size_t i = 0; i < report.legend.size(); ++i) out += "---|";
  out += "\n";
  const auto table = UsageTable(report.dfis, report.legend);
  for (std::size_t r = 0; r < table.size(); ++r) {
    out += "| i" + std::to_string(report.dfis[r].id) + " |";
    for (const bool mark : table[r]) out += mark ? " x |" : "  |";
    out += "\n";
  }
  out += "\n## Hierarchical feature interactions\n\n| DFI | Hierarchical Feature Interaction |\n|---|---|\n";
  for (const auto& d : report.dfis) {
    out += "| i" + std::to_string(d.id) + " | " + FormatDfiPath(report, d) + " |\n";
  }
  if (report.truncated) {
    out += "\n_DFI listing truncated at " + std::to_string(report.dfis.size()) + " paths._\n";
  }
  return out;
}

}  // namespace sig
