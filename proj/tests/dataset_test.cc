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


#include "sig/dataset.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "sig/error.h"

namespace sig {
namespace {

TEST(ParseCsvTest, LastColumnIsTargetByDefault) {
  const Dataset d = ParseCsv("a,b,y\n1,2,yes\n3.5,-4,no\n0,0,yes\n");
  EXPECT_EQ(d.feature_names, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(d.class_names, (std::vector<std::string>{"no", "yes"}));
  EXPECT_EQ(d.num_rows(), 3u);
  EXPECT_DOUBLE_EQ(d.at(1, 0), 3.5);
  EXPECT_DOUBLE_EQ(d.at(1, 1), -4.0);
  EXPECT_EQ(d.labels, (std::vector<int>{1, 0, 1}));
}

TEST(ParseCsvTest, NamedTargetAndDroppedColumns) {
  CsvOptions opts;
  opts.target = "cls";
  opts.drop = {"id"};
  const Dataset d = ParseCsv("id,cls,x\n7,1,0.5\n8,0,0.25\n", opts);
  EXPECT_EQ(d.feature_names, (std::vector<std::string>{"x"}));
  EXPECT_EQ(d.labels, (std::vector<int>{1, 0}));
}

TEST(ParseCsvTest, NumericClassesSortNumerically) {
  const Dataset d = ParseCsv("x,y\n1,10\n2,2\n3,10\n");
  EXPECT_EQ(d.class_names, (std::vector<std::string>{"2", "10"}));
  EXPECT_EQ(d.labels, (std::vector<int>{1, 0, 1}));
}

TEST(ParseCsvTest, MissingTargetIsInputError) {
  CsvOptions opts;
  opts.target = "nope";
  EXPECT_THROW(ParseCsv("a,y\n1,0\n", opts), InputError);
  opts.target.clear();
  opts.drop = {"ghost"};
  EXPECT_THROW(ParseCsv("a,y\n1,0\n", opts), InputError);
}

TEST(ParseCsvTest, NonNumericFeatureIsDataError) {
  EXPECT_THROW(ParseCsv("a,y\nabc,0\n"), DataError);
  EXPECT_THROW(ParseCsv("a,b,y\n1,0\n"), DataError);
}

TEST(TrainTestSplitTest, StratifiedCountsPerClass) {
  Dataset d;
  d.feature_names = {"x"};
  d.class_names = {"a", "b"};
  for (int i = 0; i < 30; ++i) {
    d.values.push_back(i);
    d.labels.push_back(i < 20 ? 0 : 1);
  }
  const Split s = TrainTestSplit(d, 0.8, true, 3);
  EXPECT_EQ(s.train.num_rows(), 24u);
  EXPECT_EQ(s.test.num_rows(), 6u);
  EXPECT_EQ(std::count(s.train.labels.begin(), s.train.labels.end(), 0), 16);
  EXPECT_EQ(std::count(s.train.labels.begin(), s.train.labels.end(), 1), 8);

  std::vector<double> all = s.train.values;
  all.insert(all.end(), s.test.values.begin(), s.test.values.end());
  std::sort(all.begin(), all.end());
  EXPECT_EQ(all, d.values);
}

TEST(TrainTestSplitTest, SeededAndRepeatable) {
  const Dataset d = MakeSyntheticDataset(100, 4, 9);
  EXPECT_EQ(TrainTestSplit(d, 0.7, true, 5).train, TrainTestSplit(d, 0.7, true, 5).train);
  EXPECT_EQ(TrainTestSplit(d, 0.7, false, 5).test.num_rows(), 30u);
  EXPECT_THROW(TrainTestSplit(d, 1.5, true, 5), InputError);
}

TEST(SyntheticDatasetTest, ShapeAndDeterminism) {
  const Dataset a = MakeSyntheticDataset(303, 13, 11);
  EXPECT_EQ(a.num_rows(), 303u);
  EXPECT_EQ(a.num_features(), 13u);
  EXPECT_EQ(a.num_classes(), 2u);
  EXPECT_NO_THROW(a.Validate());
  EXPECT_EQ(a, MakeSyntheticDataset(303, 13, 11));
  EXPECT_NE(a, MakeSyntheticDataset(303, 13, 12));

  std::map<int, int> counts;
  for (const int l : a.labels) ++counts[l];
  EXPECT_EQ(counts.size(), 2u);
}

TEST(SyntheticDatasetTest, Multiclass) {
  const Dataset d = MakeSyntheticDataset(200, 6, 1, 3);
  EXPECT_EQ(d.num_classes(), 3u);
  for (int c = 0; c < 3; ++c) {
    EXPECT_GT(std::count(d.labels.begin(), d.labels.end(), c), 0);
  }
}

}  // namespace
}  // namespace sig
