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

// sig: train a random forest, build its surrogate interpretable graph, and
// benchmark the pipeline against naive pairwise interaction indices.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sig/bench.h"
#include "sig/dataset.h"
#include "sig/error.h"
#include "sig/forest.h"
#include "sig/forest_io.h"
#include "sig/pipeline.h"
#include "sig/report.h"

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;
constexpr int kInternalError = 3;

struct RunConfig {
  std::string data;
  std::string target;
  std::vector<std::string> drop;
  double split = 0.8;
  bool no_stratify = false;
  sig::ForestParams forest;
  std::string forest_file;
  std::string clusters = "auto";
  std::size_t edges = 0;
  std::string out;
  std::vector<std::string> formats = {"dot", "json", "md"};
  std::vector<std::string> shapes;
};

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sig::DataError("cannot write '" + path.string() + "'");
  out << content;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sig::DataError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

sig::Split LoadAndSplit(const RunConfig& cfg) {
  sig::CsvOptions csv;
  csv.target = cfg.target;
  csv.drop = cfg.drop;
  const sig::Dataset data = sig::LoadCsv(cfg.data, csv);
  return sig::TrainTestSplit(data, cfg.split, !cfg.no_stratify, cfg.forest.seed);
}

int CmdTrain(const RunConfig& cfg) {
  const sig::Split split = LoadAndSplit(cfg);
  const sig::Forest forest = sig::TrainForest(split.train, cfg.forest);
  const std::string metrics =
      "train_rows=" + std::to_string(split.train.num_rows()) +
      "\ntest_rows=" + std::to_string(split.test.num_rows()) +
      "\ntrain_accuracy=" + Fixed(sig::Accuracy(forest, split.train), 6) +
      "\ntest_accuracy=" + Fixed(sig::Accuracy(forest, split.test), 6) + "\n";
  std::filesystem::create_directories(cfg.out);
  WriteFile(std::filesystem::path(cfg.out) / "forest.json", sig::ExportForest(forest));
  WriteFile(std::filesystem::path(cfg.out) / "metrics.txt", metrics);
  std::cout << metrics;
  return 0;
}

int CmdBuild(const RunConfig& cfg) {
  if (cfg.forest_file.empty() && cfg.data.empty()) {
    throw sig::InputError("build needs --forest or --data");
  }
  sig::Forest forest;
  std::size_t num_rows = 0;
  if (!cfg.data.empty()) {
    const sig::Split split = LoadAndSplit(cfg);
    num_rows = split.train.num_rows();
    forest = cfg.forest_file.empty() ? sig::TrainForest(split.train, cfg.forest)
                                     : sig::ImportForest(ReadFile(cfg.forest_file));
  } else {
    forest = sig::ImportForest(ReadFile(cfg.forest_file));
    // Each tree's leaves hold one count per (bootstrap) training draw.
    for (const auto& node : forest.trees.front().nodes) {
      for (const auto c : node.class_counts) num_rows += static_cast<std::size_t>(c);
    }
  }

  sig::PipelineOptions options;
  options.edge_budget = cfg.edges;
  if (cfg.clusters != "auto") {
    try {
      std::size_t used = 0;
      const unsigned long k = std::stoul(cfg.clusters, &used);
      if (used != cfg.clusters.size() || k < 1) throw std::invalid_argument("k");
      options.clusters = k;
    } catch (const std::logic_error&) {
      throw sig::InputError("--clusters must be 'auto' or a positive integer");
    }
  }
  const sig::PipelineResult result = sig::BuildSig(forest, num_rows, options);

  const std::filesystem::path out(cfg.out);
  std::filesystem::create_directories(out);
  for (const auto& fmt : cfg.formats) {
    if (fmt == "dot") {
      WriteFile(out / "sig.dot", sig::ExportDot(result.report));
    } else if (fmt == "json") {
      WriteFile(out / "sig.json", sig::ExportJson(result.report));
    } else if (fmt == "md") {
      WriteFile(out / "sig.md", sig::ExportMarkdown(result.report));
    } else {
      throw sig::InputError("unknown format '" + fmt + "' (expected dot, json, md)");
    }
  }
  WriteFile(out / "rules.txt",
            sig::FormatRulesDump(result.rules, result.encoded, forest.class_names));
  std::vector<std::string> texts;
  for (const auto& e : result.encoded) texts.push_back(e.text);
  WriteFile(out / "clusters.txt", sig::FormatClusterDump(result.clusters, texts));
  WriteFile(out / "program.lp", result.program.Dump());

  std::cout << "rules: " << result.rules.size() << "\nclusters: " << result.clusters.k
            << "\ngraph edges: " << result.graph.edges.size()
            << "\ncandidate variables: " << result.program.size()
            << "\nselected edges: " << result.report.edges.size()
            << "\nDFIs: " << result.report.dfis.size()
            << (result.report.truncated ? " (truncated)" : "") << "\n";
  for (std::size_t i = 0; i < result.report.legend.size(); ++i) {
    std::cout << "  f" << i + 1 << ": " << result.report.legend[i].name << "\n";
  }
  for (const auto& d : result.report.dfis) {
    std::cout << "  i" << d.id << ": " << sig::FormatDfiPath(result.report, d) << "\n";
  }
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  return 0;
}

int CmdBench(const RunConfig& cfg) {
  std::vector<sig::BenchShape> shapes;
  for (const auto& s : cfg.shapes) shapes.push_back(sig::ParseShape(s));
  if (shapes.empty()) throw sig::InputError("bench needs at least one --shapes entry");
  const auto records = sig::RunBench(shapes, cfg.forest.seed);
  const std::string csv = sig::BenchCsv(records);
  if (cfg.out.empty()) {
    std::cout << csv;
  } else {
    const std::filesystem::path path(cfg.out);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    WriteFile(path, csv);
  }
  return 0;
}

void AddForestFlags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--data", cfg.data, "CSV file, header row first");
  cmd->add_option("--target", cfg.target, "Class label column (default: last column)");
  cmd->add_option("--drop", cfg.drop, "Columns to drop before training")->delimiter(',');
  cmd->add_option("--split", cfg.split, "Training fraction")->check(CLI::Range(0.0, 1.0));
  cmd->add_flag("--no-stratify", cfg.no_stratify, "Plain shuffled split");
  cmd->add_option("--trees", cfg.forest.n_trees, "Number of trees")->check(CLI::PositiveNumber);
  cmd->add_option("--max-depth", cfg.forest.max_depth, "Maximum tree depth")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--min-samples-split", cfg.forest.min_samples_split,
                  "Minimum node size to split");
  cmd->add_option("--features-per-split", cfg.forest.features_per_split,
                  "Features drawn per split (0: ceil(sqrt(f)))");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surrogate interpretable graphs for random forests"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* train = app.add_subcommand("train", "Train a forest and write forest.json + metrics");
  AddForestFlags(train, cfg);
  train->add_option("--seed", cfg.forest.seed, "Random seed");
  train->add_option("--out", cfg.out, "Output directory")->required();
  train->get_option("--data")->required();

  auto* build = app.add_subcommand("build", "Build the SIG and write DOT/JSON/Markdown reports");
  AddForestFlags(build, cfg);
  build->add_option("--seed", cfg.forest.seed, "Random seed");
  build->add_option("--forest", cfg.forest_file, "Forest interchange document");
  build->add_option("--clusters", cfg.clusters, "auto or a cluster count");
  build->add_option("--edges", cfg.edges, "Edge budget k")->required()->check(CLI::PositiveNumber);
  build->add_option("--format", cfg.formats, "Output formats: dot,json,md")->delimiter(',');
  build->add_option("--out", cfg.out, "Output directory")->required();

  auto* bench = app.add_subcommand("bench", "Time SIG against naive pairwise interactions");
  bench->add_option("--shapes", cfg.shapes, "Shapes f:N:T:d, comma separated")
      ->delimiter(',')
      ->required();
  bench->add_option("--seed", cfg.forest.seed, "Random seed");
  bench->add_option("--out", cfg.out, "CSV output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*train) return CmdTrain(cfg);
    if (*build) return CmdBuild(cfg);
    if (*bench) return CmdBench(cfg);
  } catch (const sig::InputError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const sig::CapacityError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const sig::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kUsageError;
}
