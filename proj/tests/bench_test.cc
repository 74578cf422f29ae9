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


#include "sig/bench.h"

#include <gtest/gtest.h>

#include "sig/error.h"

namespace sig {
namespace {

TEST(ParseShapeTest, ValidAndInvalid) {
  EXPECT_EQ(ParseShape("40:2000:15:6"), (BenchShape{40, 2000, 15, 6}));
  EXPECT_THROW(ParseShape("40:2000:15"), InputError);
  EXPECT_THROW(ParseShape("a:2000:15:6"), InputError);
  EXPECT_THROW(ParseShape("40:2000:15:6:1"), InputError);
  EXPECT_THROW(ParseShape("1:2000:15:6"), InputError);
  EXPECT_THROW(ParseShape("40:2000:15:17"), InputError);
  EXPECT_THROW(ParseShape("40:20001:15:6"), InputError);
}

TEST(PairCountTest, QuadraticGrowth) {
  auto pairs = [](std::size_t f) { return f * (f - 1) / 2; };
  EXPECT_EQ(pairs(10), 45u);
  EXPECT_EQ(pairs(100), 4950u);
  EXPECT_EQ(pairs(100) / pairs(10), 110u);
}

TEST(RunBenchTest, TwoRecordsPerShape) {
  BenchOptions opts;
  opts.instances = 1;
  opts.background_rows = 2;
  opts.sampled_coalitions = 4;
  const std::vector<BenchShape> shapes = {{4, 60, 2, 3}, {16, 60, 2, 3}};
  const auto records = RunBench(shapes, 7, opts);
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(records[0].method, BenchMethod::kSig);
  EXPECT_EQ(records[1].method, BenchMethod::kNaiveSii);
  EXPECT_EQ(records[2].shape, shapes[1]);
  for (const auto& r : records) EXPECT_GE(r.wall_seconds, 0.0);

  const std::string csv = BenchCsv(records);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "method,f,N,T,d,wall_seconds");
  EXPECT_NE(csv.find("\nNaiveSII,16,60,2,3,"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

}  // namespace
}  // namespace sig
