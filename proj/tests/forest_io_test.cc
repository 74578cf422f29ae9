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


#include "sig/forest_io.h"

#include <gtest/gtest.h>

#include "sig/dataset.h"
#include "sig/error.h"
#include "sig/rules.h"

namespace sig {
namespace {

constexpr const char* kTwoTrees = R"({
  "feature_names": ["age", "bp"],
  "class_names": ["healthy", "sick"],
  "trees": [
    {"root": 0, "nodes": [
      {"id": 0, "kind": "split", "feature": 0, "threshold": 50.5, "left": 1, "right": 2},
      {"id": 1, "kind": "leaf", "class_counts": [10, 1]},
      {"id": 2, "kind": "split", "feature": 1, "threshold": 120, "left": 3, "right": 4},
      {"id": 3, "kind": "leaf", "class_counts": [4, 3]},
      {"id": 4, "kind": "leaf", "class_counts": [0, 9]}]},
    {"root": 0, "nodes": [
      {"id": 0, "kind": "split", "feature": 1, "threshold": 130.25, "left": 1, "right": 4},
      {"id": 1, "kind": "split", "feature": 0, "threshold": 40, "left": 2, "right": 3},
      {"id": 2, "kind": "leaf", "class_counts": [8, 0]},
      {"id": 3, "kind": "leaf", "class_counts": [3, 5]},
      {"id": 4, "kind": "leaf", "class_counts": [1, 7]}]}
  ]
})";

TEST(ForestIoTest, HandWrittenDocument) {
  const Forest f = ImportForest(kTwoTrees);
  EXPECT_EQ(f.trees.size(), 2u);
  EXPECT_EQ(f.feature_names, (std::vector<std::string>{"age", "bp"}));
  EXPECT_EQ(ExtractRules(f).size(), 6u);
  EXPECT_DOUBLE_EQ(f.trees[1].node(0).threshold, 130.25);
}

TEST(ForestIoTest, RoundTripTrainedForest) {
  const Dataset d = MakeSyntheticDataset(300, 9, 17);
  ForestParams p;
  p.n_trees = 6;
  const Forest f = TrainForest(d, p);
  const std::string doc = ExportForest(f);
  const Forest g = ImportForest(doc);
  EXPECT_EQ(f, g);
  EXPECT_EQ(doc, ExportForest(g));
}

TEST(ForestIoTest, DanglingNodeIsReported) {
  std::string doc = kTwoTrees;
  doc.replace(doc.find("\"left\": 3"), 9, "\"left\": 9");
  try {
    ImportForest(doc);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("dangling node"), std::string::npos) << e.what();
  }
}

TEST(ForestIoTest, MalformedDocuments) {
  EXPECT_THROW(ImportForest("{not json"), DataError);
  EXPECT_THROW(ImportForest(R"({"feature_names":[],"class_names":[],"trees":"x"})"),
               DataError);
  std::string bad_feature = kTwoTrees;
  bad_feature.replace(bad_feature.find("\"feature\": 1"), 12, "\"feature\": 5");
  EXPECT_THROW(ImportForest(bad_feature), DataError);
}

}  // namespace
}  // namespace sig
