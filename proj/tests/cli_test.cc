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


#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "sig/dataset.h"

namespace {

namespace fs = std::filesystem;

int RunCli(const std::string& args) {
  const std::string cmd = std::string(SIG_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sig_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    const sig::Dataset d = sig::MakeSyntheticDataset(240, 7, 3);
    std::ofstream csv(dir_ / "data.csv");
    for (std::size_t j = 0; j < d.num_features(); ++j) csv << "x" << j << ",";
    csv << "id,label\n";
    for (std::size_t i = 0; i < d.num_rows(); ++i) {
      for (std::size_t j = 0; j < d.num_features(); ++j) csv << d.at(i, j) << ",";
      csv << i << "," << (d.labels[i] ? "sick" : "well") << "\n";
    }
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Data() const { return (dir_ / "data.csv").string(); }
  fs::path dir_;
};

TEST_F(CliTest, TrainWritesForestAndMetrics) {
  const auto out = dir_ / "train";
  ASSERT_EQ(RunCli("train --data " + Data() + " --target label --drop id --out " + out.string()),
            0);
  EXPECT_TRUE(fs::exists(out / "forest.json"));
  const std::string metrics = Slurp(out / "metrics.txt");
  EXPECT_NE(metrics.find("train_accuracy="), std::string::npos);
  EXPECT_NE(metrics.find("test_accuracy="), std::string::npos);
}

TEST_F(CliTest, BuildIsByteIdenticalAcrossRuns) {
  const std::string common = "build --data " + Data() + " --target label --drop id --edges 8 ";
  ASSERT_EQ(RunCli(common + "--out " + (dir_ / "a").string()), 0);
  ASSERT_EQ(RunCli(common + "--out " + (dir_ / "b").string()), 0);
  for (const char* name : {"sig.dot", "sig.json", "sig.md", "rules.txt", "clusters.txt",
                           "program.lp"}) {
    const std::string a = Slurp(dir_ / "a" / name);
    EXPECT_FALSE(a.empty()) << name;
    EXPECT_EQ(a, Slurp(dir_ / "b" / name)) << name;
  }
}

TEST_F(CliTest, BuildFromSavedForest) {
  const auto train = dir_ / "train";
  ASSERT_EQ(RunCli("train --data " + Data() + " --drop id --out " + train.string()), 0);
  const auto out = dir_ / "build";
  ASSERT_EQ(RunCli("build --forest " + (train / "forest.json").string() +
                " --edges 5 --clusters 12 --format json --out " + out.string()),
            0);
  EXPECT_TRUE(fs::exists(out / "sig.json"));
  EXPECT_FALSE(fs::exists(out / "sig.dot"));
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(RunCli("--help"), 0);
  EXPECT_EQ(RunCli(""), 1);
  EXPECT_EQ(RunCli("build --data " + Data() + " --out " + dir_.string()), 1);  // no --edges
  EXPECT_EQ(RunCli("train --data " + Data() + " --target nope --out " + dir_.string()), 1);
  EXPECT_EQ(RunCli("build --data " + Data() + " --drop id --edges 3 --clusters abc --out " +
                dir_.string()),
            1);
  EXPECT_EQ(RunCli("bench --shapes 5:10"), 1);

  std::ofstream(dir_ / "bad.csv") << "a,b,y\n1,zz,0\n";
  EXPECT_EQ(RunCli("train --data " + (dir_ / "bad.csv").string() + " --out " + dir_.string()), 2);
  std::ofstream(dir_ / "bad.json") << "{\"trees\": [";
  EXPECT_EQ(RunCli("build --forest " + (dir_ / "bad.json").string() + " --edges 3 --out " +
                dir_.string()),
            2);
  EXPECT_EQ(RunCli("train --data " + (dir_ / "missing.csv").string() + " --out " + dir_.string()),
            2);
}

TEST_F(CliTest, BenchWritesCsv) {
  const auto out = dir_ / "bench.csv";
  ASSERT_EQ(RunCli("bench --shapes 4:50:2:3,5:50:2:3 --out " + out.string()), 0);
  const std::string csv = Slurp(out);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "method,f,N,T,d,wall_seconds");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

}  // namespace
