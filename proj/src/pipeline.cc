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

#include "sig/pipeline.h"

#include "sig/error.h"

namespace sig {

PipelineResult BuildSig(const Forest& forest, std::size_t num_rows,
                        const PipelineOptions& options) {
  std::vector<DecisionRule> rules = ExtractRules(forest);
  const LabelEncoding enc = LabelEncoding::Fit(forest.feature_names);
  std::vector<EncodedRule> encoded;
  std::vector<TokenList> tokens;
  encoded.reserve(rules.size());
  tokens.reserve(rules.size());
  for (const auto& r : rules) {
    encoded.push_back(StandardizeRule(r, enc));
    tokens.push_back(Tokenize(encoded.back().text));
  }

  std::vector<std::string> warnings;
  ClusterAssignment clusters;
  std::optional<TfIdfMatrix> tfidf;
  bool any_tokens = false;
  for (const auto& t : tokens) any_tokens = any_tokens || !t.empty();
  if (any_tokens) {
    tfidf.emplace(ComputeTfIdf(tokens));
    std::size_t k = options.clusters.value_or(
        ChooseClusterCount(forest.num_features(), num_rows, rules.size()));
    if (k > rules.size()) {
      warnings.push_back("cluster count " + std::to_string(k) + " exceeds rule count " +
                         std::to_string(rules.size()) + "; clamped");
      k = rules.size();
    }
    clusters = AgglomerativeCluster(*tfidf, k);
  } else {
    // Every tree is a single leaf: nothing to vectorize or connect.
    tfidf.emplace(Vocabulary{}, std::vector<std::vector<TfIdfMatrix::Entry>>(rules.size()));
    clusters.k = 1;
    clusters.labels.assign(rules.size(), 0);
  }

  const std::vector<FeaturePath> paths = ClusterPaths(rules, clusters);
  InteractionGraph graph = BuildGraph(paths, options.graph);
  if (graph.empty()) warnings.push_back("no feature transitions: the interaction graph is empty");
  SigProgram program = Formulate(graph, options.edge_budget, options.formulate);
  SigSolution solution = SolveBranchAndBound(program, options.solver);
  if (!solution.optimal) {
    warnings.push_back("branch-and-bound node limit reached; solution may be suboptimal");
  }
  const auto edges = program.Edges(solution.mask());
  if (!HasPureSource(edges, program.MergedPairs(solution.mask()))) {
    warnings.push_back(
        "optimized graph has no pure source node (over-optimization); consider a "
        "different edge budget");
  }
  if (program.dag_required &&
      !CheckAcyclic(edges, program.MergedPairs(solution.mask())).acyclic) {
    throw InvariantError("solver returned a cyclic edge selection");
  }
  SigReport report = MakeReport(program, solution, forest.feature_names, options.max_dfis);

  return {std::move(rules),   std::move(encoded), std::move(*tfidf),   std::move(clusters),
          std::move(graph),   std::move(program), std::move(solution), std::move(report),
          std::move(warnings)};
}

}  // namespace sig
