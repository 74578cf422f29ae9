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

#include <gtest/gtest.h>

#include <set>

#include "sig/error.h"

namespace sig {
namespace {

using Path = std::vector<std::vector<FeatureId>>;

Path Flat(std::vector<FeatureId> ids) {
  Path p;
  for (const auto id : ids) p.push_back({id});
  return p;
}

// Seven-feature example: f1..f7 are ids 0..6.
std::vector<ProgramEdge> SevenFeatureEdges() {
  return {{0, 1, 3}, {0, 2, 5}, {0, 6, 7}, {1, 3, 2}, {3, 2, 4},
          {2, 6, 2}, {3, 4, 1}, {4, 5, 6}, {5, 6, 2}, {1, 5, 1}};
}

// Program selecting every given edge, each as its own variable.
std::pair<SigProgram, SigSolution> SelectAll(const std::vector<ProgramEdge>& edges) {
  SigProgram p;
  SigSolution s;
  for (const auto& e : edges) {
    s.selected.push_back(p.vars.size());
    p.vars.push_back(EdgeVar{{e}});
  }
  p.budget = edges.size();
  return {p, s};
}

std::vector<std::string> Names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("Feature " + std::to_string(i + 1));
  return names;
}

TEST(EnumerateDfisTest, SevenFeaturePaths) {
  const auto list = EnumerateDfis(SevenFeatureEdges(), {});
  EXPECT_FALSE(list.truncated);
  std::vector<Path> paths;
  for (const auto& d : list.dfis) paths.push_back(d.path);
  EXPECT_EQ(paths, (std::vector<Path>{Flat({0, 1, 3, 2, 6}), Flat({0, 1, 3, 4, 5, 6}),
                                      Flat({0, 1, 5, 6}), Flat({0, 2, 6}), Flat({0, 6})}));
  EXPECT_EQ(list.dfis[0].id, 1u);
  EXPECT_EQ(list.dfis[0].features_used, (std::vector<FeatureId>{0, 1, 2, 3, 6}));
}

TEST(EnumerateDfisTest, UsageMatchesSevenFeatureTable) {
  auto [program, solution] = SelectAll(SevenFeatureEdges());
  const SigReport r = MakeReport(program, solution, Names(7));
  // Rows of the published usage table, as feature sets.
  const std::set<std::set<FeatureId>> published = {
      {0, 1, 5, 6}, {0, 1, 3, 4, 5, 6}, {0, 2, 6}, {0, 6}, {0, 1, 2, 3, 6}};
  std::set<std::set<FeatureId>> ours;
  for (const auto& row : UsageTable(r.dfis, r.legend)) {
    std::set<FeatureId> s;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c]) s.insert(r.legend[c].id);
    }
    ours.insert(s);
  }
  EXPECT_EQ(ours, published);
  EXPECT_EQ(FeatureDfiCounts(r), (std::vector<std::size_t>{5, 3, 2, 2, 1, 2, 5}));
}

TEST(EnumerateDfisTest, SmallShapes) {
  const auto single = EnumerateDfis(std::vector<ProgramEdge>{{4, 9, 1}}, {});
  ASSERT_EQ(single.dfis.size(), 1u);
  EXPECT_EQ(single.dfis[0].path, Flat({4, 9}));

  const std::vector<ProgramEdge> diamond = {{0, 1, 1}, {1, 3, 1}, {0, 2, 1}, {2, 3, 1}};
  EXPECT_EQ(EnumerateDfis(diamond, {}).dfis.size(), 2u);
  EXPECT_TRUE(EnumerateDfis(std::vector<ProgramEdge>{}, {}).dfis.empty());
}

TEST(EnumerateDfisTest, CapTruncates) {
  const auto list = EnumerateDfis(SevenFeatureEdges(), {}, 2);
  EXPECT_EQ(list.dfis.size(), 2u);
  EXPECT_TRUE(list.truncated);
}

TEST(EnumerateDfisTest, BidirectionalGroupIsOneSegment) {
  const std::vector<ProgramEdge> edges = {{0, 1, 4}, {1, 0, 3}, {1, 2, 2}};
  const auto list = EnumerateDfis(edges, {{0, 1}});
  ASSERT_EQ(list.dfis.size(), 1u);
  EXPECT_EQ(list.dfis[0].path, (Path{{0, 1}, {2}}));
}

TEST(UsageTableTest, MatchesPerPathSets) {
  const std::vector<Dfi> dfis = {{1, Flat({7, 0, 13}), {0, 7, 13}},
                                 {2, Flat({8, 0, 10}), {0, 8, 10}},
                                 {3, Path{{2, 3}, {5}}, {2, 3, 5}}};
  std::vector<LegendEntry> legend;
  for (int i = 0; i < 14; ++i) legend.push_back({i, "n" + std::to_string(i)});
  const auto table = UsageTable(dfis, legend);
  ASSERT_EQ(table.size(), 3u);
  for (std::size_t r = 0; r < 3; ++r) {
    std::set<FeatureId> expected;
    for (const auto& seg : dfis[r].path) expected.insert(seg.begin(), seg.end());
    for (std::size_t c = 0; c < 14; ++c) {
      EXPECT_EQ(table[r][c], expected.count(static_cast<FeatureId>(c)) > 0);
    }
  }
  EXPECT_EQ(std::count(table[0].begin(), table[0].end(), true), 3);
  EXPECT_TRUE(UsageTable({}, legend).empty());
}

// Fourteen features; edges are the union of ten hierarchical
// paths (f8 -> f1 -> f14 and so on), ids are label - 1.
TEST(MakeReportTest, TenPathLegend) {
  const std::vector<std::vector<FeatureId>> paths = {
      {8, 1, 14},      {8, 1, 11},         {9, 1, 14},         {9, 1, 11},
      {10, 13, 12, 11}, {10, 13, 12, 1, 14}, {10, 13, 12, 1, 11}, {10, 13, 3, 2, 7},
      {4, 3, 2, 7},    {5, 6, 3, 2, 7}};
  std::set<std::pair<FeatureId, FeatureId>> edge_set;
  std::set<Path> expected;
  for (const auto& p : paths) {
    std::vector<FeatureId> ids;
    for (const auto f : p) ids.push_back(f - 1);
    for (std::size_t i = 1; i < ids.size(); ++i) edge_set.insert({ids[i - 1], ids[i]});
    expected.insert(Flat(ids));
  }
  std::vector<ProgramEdge> edges;
  for (const auto& [u, v] : edge_set) edges.push_back({u, v, 1.0});
  auto [program, solution] = SelectAll(edges);
  const SigReport r = MakeReport(program, solution, Names(14));

  EXPECT_EQ(r.legend.size(), 14u);
  ASSERT_EQ(r.dfis.size(), 10u);
  std::set<Path> ours;
  for (const auto& d : r.dfis) ours.insert(d.path);
  EXPECT_EQ(ours, expected);
  EXPECT_EQ(FeatureDfiCounts(r),
            (std::vector<std::size_t>{6, 3, 3, 1, 1, 1, 3, 2, 2, 4, 4, 3, 4, 3}));

  const auto doc = ImportReportJson(ExportJson(r));
  EXPECT_EQ(doc.dfis.size(), 10u);
  EXPECT_EQ(doc.legend.size(), 14u);
}

TEST(ExportTest, DotSingleEdgeAndEmpty) {
  auto [program, solution] = SelectAll({{0, 1, 3}});
  const SigReport r = MakeReport(program, solution, Names(2));
  const std::string dot = ExportDot(r);
  EXPECT_NE(dot.find("f1 -> f2 [label=\"3\"];"), std::string::npos) << dot;
  EXPECT_NE(dot.find("f1 [label=\"f1: Feature 1\"];"), std::string::npos);
  EXPECT_EQ(ExportDot(SigReport{}), "digraph SIG {\n  rankdir=LR;\n}\n");
}

TEST(ExportTest, DotSevenFeatureHasTenEdges) {
  auto [program, solution] = SelectAll(SevenFeatureEdges());
  const std::string dot = ExportDot(MakeReport(program, solution, Names(7)));
  std::size_t edges = 0;
  for (std::size_t pos = dot.find(" -> "); pos != std::string::npos;
       pos = dot.find(" -> ", pos + 1)) {
    ++edges;
  }
  EXPECT_EQ(edges, 10u);
  EXPECT_NE(dot.find("f1 -> f7 [label=\"7\"];"), std::string::npos);
}

TEST(ExportTest, DotBidirectional) {
  SigProgram p;
  p.vars = {EdgeVar{{{0, 1, 4}, {1, 0, 3}}}, EdgeVar{{{1, 2, 2}}}};
  p.budget = 3;
  SigSolution s;
  s.selected = {0, 1};
  const SigReport r = MakeReport(p, s, Names(3));
  EXPECT_NE(ExportDot(r).find("f1 -> f2 [label=\"4/3\", dir=both];"), std::string::npos);
  EXPECT_EQ(FormatDfiPath(r, r.dfis[0]), "f1 ↔ f2 → f3");
}

TEST(ExportTest, JsonRoundTripAndEmptyShape) {
  auto [program, solution] = SelectAll(SevenFeatureEdges());
  const SigReport r = MakeReport(program, solution, Names(7));
  EXPECT_EQ(ImportReportJson(ExportJson(r)), r);

  const std::string empty = ExportJson(SigReport{});
  EXPECT_NE(empty.find("\"dfis\": []"), std::string::npos) << empty;
  EXPECT_NE(empty.find("\"edges\": []"), std::string::npos);
  EXPECT_EQ(ImportReportJson(empty), SigReport{});
  EXPECT_THROW(ImportReportJson("{"), ParseError);
  EXPECT_THROW(ImportReportJson("{\"legend\": 3}"), DataError);
}

TEST(ExportTest, MarkdownTables) {
  auto [program, solution] = SelectAll(SevenFeatureEdges());
  const std::string md = ExportMarkdown(MakeReport(program, solution, Names(7)));
  EXPECT_NE(md.find("| f7 | Feature 7 |"), std::string::npos);
  EXPECT_NE(md.find("| i4 | x |  | x |  |  |  | x |"), std::string::npos) << md;
  EXPECT_NE(md.find("| i5 | x |  |  |  |  |  | x |"), std::string::npos);
  EXPECT_NE(md.find("| i1 | f1 → f2 → f4 → f3 → f7 |"), std::string::npos);
}

TEST(SigReportTest, LabelsFollowLegendPosition) {
  SigReport r;
  r.legend = {{3, "a"}, {10, "b"}};
  EXPECT_EQ(r.Label(3), "f1");
  EXPECT_EQ(r.Label(10), "f2");
}

}  // namespace
}  // namespace sig
