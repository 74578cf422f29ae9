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

#ifndef SIG_SIG_PROGRAM_H_
#define SIG_SIG_PROGRAM_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sig/interaction_graph.h"

namespace sig {

struct ProgramEdge {
  FeatureId src = 0;
  FeatureId dst = 0;
  double weight = 0.0;

  bool operator==(const ProgramEdge&) const = default;
};

// One binary variable. A plain edge, or a bidirectional pair merged into a
// super-edge (two directed edges sharing one variable; it costs 2 against the
// budget and its endpoints are contracted for the acyclicity check).
struct EdgeVar {
  std::vector<ProgramEdge> edges;

  double weight() const;
  std::size_t cost() const { return edges.size(); }
  bool merged() const { return edges.size() == 2; }
};

// x[successor] <= x[predecessor]. A predecessor of kAbsent means the
// predecessor edge is not a candidate, which pins the successor to 0.
struct PrefixConstraint {
  static constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

  std::size_t predecessor = kAbsent;
  std::size_t successor = 0;

  auto operator<=>(const PrefixConstraint&) const = default;
};

// Variable subset as a bit mask; variable i is bit i.
using Selection = std::uint64_t;

inline constexpr std::size_t kMaxProgramVars = 64;

// maximize sum(w * x) - epsilon * sum(cost * x)
// s.t.     sum(cost * x) <= budget, prefix constraints,
//          selected edges acyclic after contracting merged pairs (when
//          dag_required), x binary.
struct SigProgram {
  std::vector<EdgeVar> vars;  // descending weight, ties by first edge
  std::size_t budget = 1;
  std::vector<PrefixConstraint> prefix;  // sorted, unique
  bool dag_required = true;
  double epsilon = 1e-6;

  std::size_t size() const { return vars.size(); }

  double Objective(Selection s) const;
  std::size_t Cost(Selection s) const;
  // Directed edges of the selection, sorted by (src, dst).
  std::vector<ProgramEdge> Edges(Selection s) const;
  // Unordered pairs (min, max) of the selected merged variables.
  std::set<EdgeKey> MergedPairs(Selection s) const;

  // Checks every constraint from scratch (Kahn's algorithm for the DAG part).
  bool Feasible(Selection s) const;

  // LP-like listing: objective, budget, one line per prefix constraint.
  std::string Dump() const;
};

struct FormulateOptions {
  // Only the heaviest edges become candidates (ties by (src, dst)).
  std::size_t max_candidates = kMaxProgramVars;
  bool dag_required = true;
  bool merge_bidirectional = true;
  // epsilon = epsilon_scale * (largest candidate edge weight).
  double epsilon_scale = 1e-6;
};

// Prefix rule: each candidate that never opens a path gets one predecessor,
// the preceding edge on its heaviest path (largest multiplicity, first path
// on ties). A missing predecessor candidate pins it to 0; requirement cycles
// are cut at their lowest variable index.
// Throws InputError when budget < 1. An empty graph gives an empty program.
SigProgram Formulate(const InteractionGraph& graph, std::size_t budget,
                     const FormulateOptions& options = {});

struct SigSolution {
  std::vector<std::size_t> selected;  // variable indices, ascending
  double objective = 0.0;
  bool optimal = true;
  std::size_t nodes_explored = 0;

  Selection mask() const;
};

struct SolverOptions {
  // Search stops after this many nodes; the incumbent is returned with
  // optimal = false.
  std::size_t node_limit = 5'000'000;
};

// Depth-first branch and bound. Branches on variables in descending weight
// (include first); the bound is the fractional-knapsack value of the free
// variables in the residual budget. Among equal objectives the selection
// whose sorted edge list is lexicographically smallest wins.
SigSolution SolveBranchAndBound(const SigProgram& program,
                                const SolverOptions& options = {});

// Exhaustive enumeration with the same objective and tie-break. Throws
// CapacityError above 20 variables.
SigSolution SolveBruteForce(const SigProgram& program);

// True when `a` precedes `b` as sorted (src, dst) edge lists.
bool EdgeListLess(std::span<const ProgramEdge> a, std::span<const ProgramEdge> b);

struct AcyclicCheck {
  bool acyclic = true;
  std::vector<FeatureId> order;  // topological, when acyclic
  std::vector<FeatureId> cycle;  // a violating cycle, otherwise
};

// Kahn's algorithm after contracting each pair in `merged` into one node
// (pairs whose two directions are both present). Ready nodes are taken in
// ascending id order. Edges inside a contracted component count as cycles.
AcyclicCheck CheckAcyclic(std::span<const ProgramEdge> edges,
                          const std::set<EdgeKey>& merged = {});

// A node (or contracted bidirectional group) with outgoing and no incoming
// selected edges. Its absence is the over-optimization symptom of a
// too-tight budget.
bool HasPureSource(std::span<const ProgramEdge> edges, const std::set<EdgeKey>& merged = {});

}  // namespace sig

#endif  // SIG_SIG_PROGRAM_H_
