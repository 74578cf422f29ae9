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

#include "sig/sig_program.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

#include "sig/error.h"

namespace sig {
namespace {

constexpr Selection Bit(std::size_t i) { return Selection{1} << i; }

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

// Union-find over a fixed set of feature ids.
class Components {
 public:
  explicit Components(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Unite(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Cycle test used inside the search: contraction plus iterative three-colour
// DFS. Kept separate from CheckAcyclic so the exhaustive solver validates
// the search through a different algorithm.
class SearchCycleTest {
 public:
  explicit SearchCycleTest(const SigProgram& program) : program_(program) {
    std::vector<FeatureId> ids;
    for (const auto& v : program.vars) {
      for (const auto& e : v.edges) {
        ids.push_back(e.src);
        ids.push_back(e.dst);
      }
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (const auto& v : program.vars) {
      std::vector<std::pair<std::size_t, std::size_t>> ends;
      for (const auto& e : v.edges) {
        ends.emplace_back(Index(ids, e.src), Index(ids, e.dst));
      }
      ends_.push_back(std::move(ends));
    }
    num_nodes_ = ids.size();
  }

  bool HasCycle(Selection s) const {
    Components comp(num_nodes_);
    for (Selection rest = s; rest != 0; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      if (program_.vars[i].merged()) comp.Unite(ends_[i][0].first, ends_[i][0].second);
    }
    std::vector<std::vector<std::size_t>> adj(num_nodes_);
    for (Selection rest = s; rest != 0; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      if (program_.vars[i].merged()) continue;
      const std::size_t a = comp.Find(ends_[i][0].first);
      const std::size_t b = comp.Find(ends_[i][0].second);
      if (a == b) return true;
      adj[a].push_back(b);
    }
    enum : char { kWhite, kGrey, kBlack };
    std::vector<char> colour(num_nodes_, kWhite);
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t root = 0; root < num_nodes_; ++root) {
      if (colour[root] != kWhite || adj[root].empty()) continue;
      stack.emplace_back(root, 0);
      colour[root] = kGrey;
      while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next == adj[node].size()) {
          colour[node] = kBlack;
          stack.pop_back();
          continue;
        }
        const std::size_t child = adj[node][next++];
        if (colour[child] == kGrey) return true;
        if (colour[child] == kWhite) {
          colour[child] = kGrey;
          stack.emplace_back(child, 0);
        }
      }
    }
    return false;
  }

 private:
  static std::size_t Index(const std::vector<FeatureId>& ids, FeatureId f) {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), f) - ids.begin());
  }

  const SigProgram& program_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> ends_;
  std::size_t num_nodes_ = 0;
};

SigSolution MakeSolution(const SigProgram& program, Selection s) {
  SigSolution out;
  for (Selection rest = s; rest != 0; rest &= rest - 1) {
    out.selected.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  out.objective = program.Objective(s);
  return out;
}

// True when candidate `s` beats incumbent `best`.
bool Improves(const SigProgram& program, Selection s, double obj, Selection best,
              double best_obj) {
  if (obj != best_obj) return obj > best_obj;
  if (s == best) return false;
  return EdgeListLess(program.Edges(s), program.Edges(best));
}

class BranchAndBound {
 public:
  BranchAndBound(const SigProgram& program, const SolverOptions& options)
      : program_(program), options_(options), cycles_(program) {
    const std::size_t m = program.size();
    value_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      value_[i] = program.vars[i].weight() - program.epsilon * program.vars[i].cost();
    }
    by_density_.resize(m);
    std::iota(by_density_.begin(), by_density_.end(), 0);
    std::stable_sort(by_density_.begin(), by_density_.end(), [&](std::size_t a, std::size_t b) {
      return value_[a] / program.vars[a].cost() > value_[b] / program.vars[b].cost();
    });

    // Transitive predecessor closures; absent predecessors pin to zero.
    std::vector<Selection> direct(m, 0);
    for (const auto& c : program.prefix) {
      if (c.predecessor == PrefixConstraint::kAbsent) {
        pinned_ |= Bit(c.successor);
      } else {
        direct[c.successor] |= Bit(c.predecessor);
      }
    }
    pred_closure_ = direct;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < m; ++i) {
        Selection next = pred_closure_[i];
        for (Selection rest = pred_closure_[i]; rest != 0; rest &= rest - 1) {
          next |= pred_closure_[static_cast<std::size_t>(std::countr_zero(rest))];
        }
        if (next != pred_closure_[i]) {
          pred_closure_[i] = next;
          changed = true;
        }
      }
    }
    succ_closure_.assign(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      for (Selection rest = pred_closure_[j]; rest != 0; rest &= rest - 1) {
        succ_closure_[static_cast<std::size_t>(std::countr_zero(rest))] |= Bit(j);
      }
    }
    all_ = m == 64 ? ~Selection{0} : Bit(m) - 1;
  }

  SigSolution Run() {
    Selection excluded = 0;
    for (Selection rest = pinned_; rest != 0; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      excluded |= Bit(i) | succ_closure_[i];
    }
    best_ = 0;
    best_obj_ = program_.Objective(0);
    Search(0, excluded);
    SigSolution out = MakeSolution(program_, best_);
    out.optimal = !aborted_;
    out.nodes_explored = nodes_;
    return out;
  }

 private:
  void Search(Selection included, Selection excluded) {
    if (aborted_) return;
    if (++nodes_ > options_.node_limit) {
      aborted_ = true;
      return;
    }
    // Every visited node's included set is feasible by construction.
    const double obj = program_.Objective(included);
    if (Improves(program_, included, obj, best_, best_obj_)) {
      best_ = included;
      best_obj_ = obj;
    }
    const Selection free = all_ & ~included & ~excluded;
    if (free == 0) return;
    const std::size_t residual = program_.budget - program_.Cost(included);
    if (Bound(obj, free, residual) < best_obj_ - 1e-9 * std::max(1.0, std::abs(best_obj_))) {
      return;
    }

    const auto i = static_cast<std::size_t>(std::countr_zero(free));
    const Selection with = included | Bit(i) | pred_closure_[i];
    if ((with & excluded) == 0 && program_.Cost(with) <= program_.budget &&
        (!program_.dag_required || !cycles_.HasCycle(with))) {
      Search(with, excluded);
    }
    Search(included, excluded | Bit(i) | succ_closure_[i]);
  }

  double Bound(double obj, Selection free, std::size_t residual) const {
    double bound = obj;
    double room = static_cast<double>(residual);
    for (const std::size_t i : by_density_) {
      if (room <= 0.0) break;
      if ((free & Bit(i)) == 0 || value_[i] <= 0.0) continue;
      const double cost = static_cast<double>(program_.vars[i].cost());
      const double take = std::min(1.0, room / cost);
      bound += take * value_[i];
      room -= take * cost;
    }
    return bound;
  }

  const SigProgram& program_;
  const SolverOptions& options_;
  SearchCycleTest cycles_;
  std::vector<double> value_;
  std::vector<std::size_t> by_density_;
  std::vector<Selection> pred_closure_;
  std::vector<Selection> succ_closure_;
  Selection pinned_ = 0;
  Selection all_ = 0;
  Selection best_ = 0;
  double best_obj_ = 0.0;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

double EdgeVar::weight() const {
  double w = 0.0;
  for (const auto& e : edges) w += e.weight;
  return w;
}

double SigProgram::Objective(Selection s) const {
  double w = 0.0;
  std::size_t cost = 0;
  for (Selection rest = s; rest != 0; rest &= rest - 1) {
    const auto& v = vars[static_cast<std::size_t>(std::countr_zero(rest))];
    w += v.weight();
    cost += v.cost();
  }
  return w - epsilon * static_cast<double>(cost);
}

std::size_t SigProgram::Cost(Selection s) const {
  std::size_t cost = 0;
  for (Selection rest = s; rest != 0; rest &= rest - 1) {
    cost += vars[static_cast<std::size_t>(std::countr_zero(rest))].cost();
  }
  return cost;
}

std::vector<ProgramEdge> SigProgram::Edges(Selection s) const {
  std::vector<ProgramEdge> out;
  for (Selection rest = s; rest != 0; rest &= rest - 1) {
    const auto& v = vars[static_cast<std::size_t>(std::countr_zero(rest))];
    out.insert(out.end(), v.edges.begin(), v.edges.end());
  }
  std::sort(out.begin(), out.end(), [](const ProgramEdge& a, const ProgramEdge& b) {
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });
  return out;
}

std::set<EdgeKey> SigProgram::MergedPairs(Selection s) const {
  std::set<EdgeKey> out;
  for (Selection rest = s; rest != 0; rest &= rest - 1) {
    const auto& v = vars[static_cast<std::size_t>(std::countr_zero(rest))];
    if (v.merged()) {
      out.insert({std::min(v.edges[0].src, v.edges[0].dst),
                  std::max(v.edges[0].src, v.edges[0].dst)});
    }
  }
  return out;
}

bool SigProgram::Feasible(Selection s) const {
  if (size() < 64 && (s >> size()) != 0) return false;
  if (Cost(s) > budget) return false;
  for (const auto& c : prefix) {
    const bool succ_on = (s & Bit(c.successor)) != 0;
    if (!succ_on) continue;
    if (c.predecessor == PrefixConstraint::kAbsent) return false;
    if ((s & Bit(c.predecessor)) == 0) return false;
  }
  if (dag_required) {
    const auto edges = Edges(s);
    if (!CheckAcyclic(edges, MergedPairs(s)).acyclic) return false;
  }
  return true;
}

std::string SigProgram::Dump() const {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    out += "\\ x" + std::to_string(i) + " =";
    for (std::size_t k = 0; k < vars[i].edges.size(); ++k) {
      const auto& e = vars[i].edges[k];
      out += (k > 0 ? " +" : "") + std::string(" f") + std::to_string(e.src) + "->f" +
             std::to_string(e.dst) + " (w=" + Num(e.weight) + ")";
    }
    out += "\n";
  }
  out += "maximize obj:";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    out += (i > 0 ? " + " : " ") + Num(vars[i].weight() - epsilon * vars[i].cost()) + " x" +
           std::to_string(i);
  }
  out += "\nsubject to\n budget:";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    out += (i > 0 ? " + " : " ") + std::to_string(vars[i].cost()) + " x" + std::to_string(i);
  }
  out += " <= " + std::to_string(budget) + "\n";
  for (const auto& c : prefix) {
    if (c.predecessor == PrefixConstraint::kAbsent) {
      out += " prefix: x" + std::to_string(c.successor) + " = 0\n";
    } else {
      out += " prefix: x" + std::to_string(c.successor) + " - x" +
             std::to_string(c.predecessor) + " <= 0\n";
    }
  }
  out += std::string(" dag: ") + (dag_required ? "required" : "off") + "\nbinary";
  for (std::size_t i = 0; i < vars.size(); ++i) out += " x" + std::to_string(i);
  return out + "\nend\n";
}

SigProgram Formulate(const InteractionGraph& graph, std::size_t budget,
                     const FormulateOptions& options) {
  if (budget < 1) throw InputError("edge budget k must be >= 1");
  if (options.max_candidates > kMaxProgramVars) {
    throw InputError("at most " + std::to_string(kMaxProgramVars) + " candidate edges");
  }
  SigProgram program;
  program.budget = budget;
  program.dag_required = options.dag_required;

  std::vector<std::pair<EdgeKey, std::int64_t>> ranked(graph.edges.begin(), graph.edges.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > options.max_candidates) ranked.resize(options.max_candidates);
  std::map<EdgeKey, std::int64_t> candidates(ranked.begin(), ranked.end());

  double max_weight = 0.0;
  for (const auto& [key, w] : candidates) {
    max_weight = std::max(max_weight, static_cast<double>(w));
    const auto [u, v] = key;
    const bool paired = options.merge_bidirectional && graph.IsBidirectional(u, v) &&
                        candidates.count({v, u}) > 0;
    if (paired && u > v) continue;  // emitted with (v, u)
    EdgeVar var;
    var.edges.push_back({u, v, static_cast<double>(w)});
    if (paired) var.edges.push_back({v, u, static_cast<double>(candidates.at({v, u}))});
    program.vars.push_back(std::move(var));
  }
  std::stable_sort(program.vars.begin(), program.vars.end(),
                   [](const EdgeVar& a, const EdgeVar& b) {
                     if (a.weight() != b.weight()) return a.weight() > b.weight();
                     return std::tie(a.edges[0].src, a.edges[0].dst) <
                            std::tie(b.edges[0].src, b.edges[0].dst);
                   });
  program.epsilon = options.epsilon_scale * (max_weight > 0.0 ? max_weight : 1.0);

  std::map<EdgeKey, std::size_t> var_of;
  for (std::size_t i = 0; i < program.vars.size(); ++i) {
    for (const auto& e : program.vars[i].edges) var_of[{e.src, e.dst}] = i;
  }
  auto lookup = [&](const EdgeKey& key) {
    const auto it = var_of.find(key);
    return it == var_of.end() ? PrefixConstraint::kAbsent : it->second;
  };
  // One predecessor per successor, taken from the heaviest path in which the
  // edge is not the first step; edges that open some path stay free.
  const std::size_t n = program.vars.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pred_of(n, kNone);
  std::vector<std::int64_t> pred_weight(n, 0);
  std::vector<char> opens_path(n, 0);
  for (const FeaturePath& path : graph.paths) {
    const auto steps = Transitions(path);
    for (std::size_t j = 0; j < steps.size(); ++j) {
      const std::size_t succ = lookup(steps[j]);
      if (succ == PrefixConstraint::kAbsent) continue;
      if (j == 0) {
        opens_path[succ] = 1;
        continue;
      }
      const std::size_t pred = lookup(steps[j - 1]);
      if (pred == succ) continue;
      if (pred_of[succ] == kNone || path.multiplicity > pred_weight[succ]) {
        pred_of[succ] = pred;
        pred_weight[succ] = path.multiplicity;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (opens_path[i]) pred_of[i] = kNone;
  }
  // Break requirement cycles at their lowest-indexed (heaviest) variable.
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> trail;
    std::vector<char> on_trail(n, 0);
    std::size_t cur = start;
    while (cur != kNone && cur != PrefixConstraint::kAbsent && !on_trail[cur]) {
      on_trail[cur] = 1;
      trail.push_back(cur);
      cur = pred_of[cur];
    }
    if (cur == kNone || cur == PrefixConstraint::kAbsent) continue;
    std::size_t lowest = cur;
    for (auto it = std::find(trail.begin(), trail.end(), cur); it != trail.end(); ++it) {
      lowest = std::min(lowest, *it);
    }
    pred_of[lowest] = kNone;
  }
  std::set<PrefixConstraint> prefix;
  for (std::size_t i = 0; i < n; ++i) {
    if (pred_of[i] != kNone) prefix.insert({pred_of[i], i});
  }
  program.prefix.assign(prefix.begin(), prefix.end());
  return program;
}

Selection SigSolution::mask() const {
  Selection s = 0;
  for (const auto i : selected) s |= Bit(i);
  return s;
}

SigSolution SolveBranchAndBound(const SigProgram& program, const SolverOptions& options) {
  if (program.size() > kMaxProgramVars) throw CapacityError("too many program variables");
  if (program.budget < 1) throw InputError("edge budget k must be >= 1");
  return BranchAndBound(program, options).Run();
}

SigSolution SolveBruteForce(const SigProgram& program) {
  if (program.size() > 20) {
    throw CapacityError("brute force is limited to 20 variables, got " +
                        std::to_string(program.size()));
  }
  Selection best = 0;
  double best_obj = program.Objective(0);
  const Selection end = Bit(program.size());
  std::size_t visited = 0;
  for (Selection s = 1; s < end; ++s) {
    ++visited;
    if (!program.Feasible(s)) continue;
    const double obj = program.Objective(s);
    if (Improves(program, s, obj, best, best_obj)) {
      best = s;
      best_obj = obj;
    }
  }
  SigSolution out = MakeSolution(program, best);
  out.nodes_explored = visited + 1;
  return out;
}

bool EdgeListLess(std::span<const ProgramEdge> a, std::span<const ProgramEdge> b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(), [](const ProgramEdge& x, const ProgramEdge& y) {
        return std::tie(x.src, x.dst) < std::tie(y.src, y.dst);
      });
}

AcyclicCheck CheckAcyclic(std::span<const ProgramEdge> edges, const std::set<EdgeKey>& merged) {
  std::set<EdgeKey> present;
  std::vector<FeatureId> ids;
  for (const auto& e : edges) {
    present.insert({e.src, e.dst});
    ids.push_back(e.src);
    ids.push_back(e.dst);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto index = [&](FeatureId f) {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), f) - ids.begin());
  };
  auto is_merge_edge = [&](FeatureId u, FeatureId v) {
    return merged.count({std::min(u, v), std::max(u, v)}) > 0 && present.count({u, v}) > 0 &&
           present.count({v, u}) > 0;
  };

  Components comp(ids.size());
  for (const auto& e : edges) {
    if (is_merge_edge(e.src, e.dst)) comp.Unite(index(e.src), index(e.dst));
  }
  const std::size_t n = ids.size();
  std::vector<std::vector<std::size_t>> adj(n);
  std::vector<std::size_t> indegree(n, 0);
  AcyclicCheck out;
  for (const auto& e : edges) {
    if (is_merge_edge(e.src, e.dst)) continue;
    const std::size_t a = comp.Find(index(e.src));
    const std::size_t b = comp.Find(index(e.dst));
    if (a == b) {
      out.acyclic = false;
      out.cycle = {e.src, e.dst};
      return out;
    }
    adj[a].push_back(b);
    ++indegree[b];
  }

  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t x = 0; x < n; ++x) {
    if (comp.Find(x) == x && indegree[x] == 0) ready.push(x);
  }
  std::vector<std::size_t> reps_order;
  while (!ready.empty()) {
    const std::size_t x = ready.top();
    ready.pop();
    reps_order.push_back(x);
    for (const std::size_t y : adj[x]) {
      if (--indegree[y] == 0) ready.push(y);
    }
  }
  std::size_t reps = 0;
  for (std::size_t x = 0; x < n; ++x) reps += comp.Find(x) == x ? 1 : 0;

  if (reps_order.size() == reps) {
    for (const std::size_t r : reps_order) {
      for (std::size_t x = 0; x < n; ++x) {
        if (comp.Find(x) == r) out.order.push_back(ids[x]);
      }
    }
    return out;
  }

  // Every unprocessed node keeps an unprocessed predecessor, so walking
  // predecessors from any of them must revisit a node.
  out.acyclic = false;
  std::vector<bool> done(n, false);
  for (const std::size_t r : reps_order) done[r] = true;
  std::vector<std::vector<std::size_t>> radj(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (const std::size_t b : adj[a]) radj[b].push_back(a);
  }
  std::size_t x = n;
  for (std::size_t y = 0; y < n && x == n; ++y) {
    if (comp.Find(y) == y && !done[y]) x = y;
  }
  std::vector<std::size_t> walk;
  std::vector<std::size_t> pos(n, n);
  while (pos[x] == n) {
    pos[x] = walk.size();
    walk.push_back(x);
    std::size_t prev = n;
    for (const std::size_t y : radj[x]) {
      if (!done[y] && (prev == n || y < prev)) prev = y;
    }
    x = prev;
  }
  // The walk runs against edge direction; reverse the loop part.
  for (std::size_t k = walk.size(); k-- > pos[x];) out.cycle.push_back(ids[walk[k]]);
  std::rotate(out.cycle.begin(), std::min_element(out.cycle.begin(), out.cycle.end()),
              out.cycle.end());
  return out;
}

bool HasPureSource(std::span<const ProgramEdge> edges, const std::set<EdgeKey>& merged) {
  std::set<EdgeKey> present;
  std::vector<FeatureId> ids;
  for (const auto& e : edges) {
    present.insert({e.src, e.dst});
    ids.push_back(e.src);
    ids.push_back(e.dst);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto index = [&](FeatureId f) {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), f) - ids.begin());
  };
  auto is_merge_edge = [&](FeatureId u, FeatureId v) {
    return merged.count({std::min(u, v), std::max(u, v)}) > 0 && present.count({v, u}) > 0;
  };
  Components comp(ids.size());
  for (const auto& e : edges) {
    if (is_merge_edge(e.src, e.dst)) comp.Unite(index(e.src), index(e.dst));
  }
  std::vector<char> has_in(ids.size(), 0);
  for (const auto& e : edges) {
    if (!is_merge_edge(e.src, e.dst)) has_in[comp.Find(index(e.dst))] = 1;
  }
  for (std::size_t x = 0; x < ids.size(); ++x) {
    if (comp.Find(x) == x && !has_in[x]) return true;
  }
  return false;
}

}  // namespace sig
