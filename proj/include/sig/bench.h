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

#ifndef SIG_BENCH_H_
#define SIG_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sig {

struct BenchShape {
  std::size_t f = 10;  // features
  std::size_t n = 1000;  // rows
  std::size_t t = 15;  // trees
  std::size_t d = 6;   // max depth

  bool operator==(const BenchShape&) const = default;
};

enum class BenchMethod { kSig, kNaiveSii };

struct BenchRecord {
  BenchMethod method = BenchMethod::kSig;
  BenchShape shape;
  double wall_seconds = 0.0;
};

struct BenchOptions {
  std::size_t instances = 10;
  std::size_t background_rows = 8;
  // Up to this many features the pair index is computed exactly
  // (2^(f-2) coalitions per pair); beyond it, by sampling.
  std::size_t exact_max_features = 14;
  std::size_t sampled_coalitions = 256;
  std::size_t edge_budget = 15;
};

// Limits: f <= 256, N <= 10000, T <= 500, d <= 16, f >= 2, N >= 10.
void ValidateShape(const BenchShape& shape);

// "f:N:T:d", e.g. "40:2000:15:6". Throws InputError when malformed.
BenchShape ParseShape(std::string_view text);

// Per shape: a seeded synthetic dataset and a trained forest, then the wall
// time of (a) the SIG pipeline and (b) naive pairwise interaction indices
// for every feature pair over `instances` rows. Records come in shape order,
// SIG before NaiveSII. Timings run single-threaded.
std::vector<BenchRecord> RunBench(std::span<const BenchShape> shapes, std::uint64_t seed,
                                  const BenchOptions& options = {});

// "method,f,N,T,d,wall_seconds" header plus one line per record.
std::string BenchCsv(std::span<const BenchRecord> records);

}  // namespace sig

#endif  // SIG_BENCH_H_
