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

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <random>

#include "sig/dataset.h"
#include "sig/error.h"
#include "sig/forest.h"
#include "sig/parallel.h"
#include "sig/pipeline.h"
#include "sig/shapley.h"

namespace sig {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point begin) {
  const std::chrono::duration<double> d = Clock::now() - begin;
  return std::max(d.count(), 1e-9);
}

// Pair indices for every feature pair over the first `instances` rows.
double NaivePairInteractions(const Forest& forest, const Dataset& data,
                             const BenchOptions& options, std::uint64_t seed) {
  const std::size_t bg_rows = std::min(options.background_rows, data.num_rows());
  std::vector<std::size_t> bg_index(bg_rows);
  for (std::size_t i = 0; i < bg_rows; ++i) bg_index[i] = data.num_rows() - 1 - i;
  const Dataset background = data.Subset(bg_index);
  const std::size_t f = data.num_features();
  std::mt19937_64 rng(seed);
  double checksum = 0.0;
  const std::size_t instances = std::min(options.instances, data.num_rows());
  for (std::size_t r = 0; r < instances; ++r) {
    const ForestGame game(forest, data.row(r), background);
    const bool exact = f <= options.exact_max_features;
    const ValueFunction v = exact ? game.AsValueFunction() : ValueFunction{};
    for (int a = 0; a < static_cast<int>(f); ++a) {
      for (int b = a + 1; b < static_cast<int>(f); ++b) {
        const int pair[] = {a, b};
        checksum += exact ? ShapleyInteraction(v, pair)
                          : SampledPairInteraction(game, a, b, options.sampled_coalitions, rng);
      }
    }
  }
  return checksum;
}

std::size_t ParseField(std::string_view text) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("shape field '" + std::string(text) + "' is not a non-negative integer");
  }
  return v;
}

}  // namespace

void ValidateShape(const BenchShape& s) {
  if (s.f < 2 || s.f > 256) throw InputError("bench shape needs 2 <= f <= 256");
  if (s.n < 10 || s.n > 10000) throw InputError("bench shape needs 10 <= N <= 10000");
  if (s.t < 1 || s.t > 500) throw InputError("bench shape needs 1 <= T <= 500");
  if (s.d < 1 || s.d > 16) throw InputError("bench shape needs 1 <= d <= 16");
}

BenchShape ParseShape(std::string_view text) {
  std::vector<std::string_view> parts;
  for (std::size_t pos = 0;;) {
    const std::size_t colon = text.find(':', pos);
    parts.push_back(text.substr(pos, colon == std::string_view::npos ? colon : colon - pos));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (parts.size() != 4) {
    throw InputError("shape '" + std::string(text) + "' must look like f:N:T:d");
  }
  BenchShape s{ParseField(parts[0]), ParseField(parts[1]), ParseField(parts[2]),
               ParseField(parts[3])};
  ValidateShape(s);
  return s;
}

std::vector<BenchRecord> RunBench(std::span<const BenchShape> shapes, std::uint64_t seed,
                                  const BenchOptions& options) {
  for (const auto& s : shapes) ValidateShape(s);
  const ScopedWorkerLimit single_thread(1);
  std::vector<BenchRecord> records;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const BenchShape& s = shapes[i];
    const std::uint64_t shape_seed = seed + 7919 * i;
    const Dataset data = MakeSyntheticDataset(s.n, s.f, shape_seed);
    ForestParams params;
    params.n_trees = s.t;
    params.max_depth = s.d;
    params.seed = shape_seed;
    const Forest forest = TrainForest(data, params);

    PipelineOptions pipeline;
    pipeline.edge_budget = options.edge_budget;
    auto begin = Clock::now();
    const PipelineResult result = BuildSig(forest, data.num_rows(), pipeline);
    records.push_back({BenchMethod::kSig, s, Seconds(begin)});

    begin = Clock::now();
    volatile double sink = NaivePairInteractions(forest, data, options, shape_seed);
    (void)sink;
    records.push_back({BenchMethod::kNaiveSii, s, Seconds(begin)});
  }
  return records;
}

std::string BenchCsv(std::span<const BenchRecord> records) {
  std::string out = "method,f,N,T,d,wall_seconds\n";
  char buf[64];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof(buf), "%.6f", r.wall_seconds);
    out += std::string(r.method == BenchMethod::kSig ? "SIG" : "NaiveSII") + "," +
           std::to_string(r.shape.f) + "," + std::to_string(r.shape.n) + "," +
           std::to_string(r.shape.t) + "," + std::to_string(r.shape.d) + "," + buf + "\n";
  }
  return out;
}

}  // namespace sig
