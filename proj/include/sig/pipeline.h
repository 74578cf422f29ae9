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

#ifndef SIG_PIPELINE_H_
#define SIG_PIPELINE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sig/cluster.h"
#include "sig/forest.h"
#include "sig/interaction_graph.h"
#include "sig/report.h"
#include "sig/rules.h"
#include "sig/sig_program.h"
#include "sig/tfidf.h"

namespace sig {

struct PipelineOptions {
  // Unset picks round(sqrt(f + N)).
  std::optional<std::size_t> clusters;
  std::size_t edge_budget = 15;
  GraphOptions graph;
  FormulateOptions formulate;
  SolverOptions solver;
  std::size_t max_dfis = kMaxDfis;
};

struct PipelineResult {
  std::vector<DecisionRule> rules;
  std::vector<EncodedRule> encoded;
  TfIdfMatrix tfidf;
  ClusterAssignment clusters;
  InteractionGraph graph;
  SigProgram program;
  SigSolution solution;
  SigReport report;
  std::vector<std::string> warnings;
};

// Runs every stage on `forest`. `num_rows` is the training row count N used
// by the cluster-count heuristic.
PipelineResult BuildSig(const Forest& forest, std::size_t num_rows,
                        const PipelineOptions& options = {});

}  // namespace sig

#endif  // SIG_PIPELINE_H_
