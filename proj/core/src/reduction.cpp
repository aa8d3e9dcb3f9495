// Copyright 2026 The dskernel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dskernel/reduction.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "dskernel/partition.hpp"
#include "dskernel/random.hpp"

namespace dskernel {
namespace {

using Vertices = std::vector<VertexId>;

// What a rule would do, computed without touching the graph.
struct Plan {
  RuleKind rule = RuleKind::kRule1;
  Vertices centers;
  Vertices removed;  // sorted; includes forced centers in annotated mode
  Vertices forced;
  Vertices whiten;   // surviving neighbors of forced vertices
  // Each gadget is attached to the listed centers.
  std::vector<Vertices> gadgets;
  std::int64_t delta = 0;
};

bool Contains(const Vertices& sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

Vertices Union(const Vertices& a, const Vertices& b) {
  Vertices out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

template <typename Pred>
Vertices Filter(const Vertices& in, Pred pred) {
  Vertices out;
  std::copy_if(in.begin(), in.end(), std::back_inserter(out), pred);
  return out;
}

// |V| + |E| change: added gadget vertices and edges minus removed vertices
// and every edge with an endpoint among them.
std::int64_t PotentialDelta(const Graph& g, const Plan& plan) {
  std::int64_t removed_edges = 0;
  for (VertexId x : plan.removed) {
    for (VertexId y : g.Neighbors(x)) {
      // Edges inside the removed set are seen twice; count them once.
      if (!Contains(plan.removed, y) || x < y) ++removed_edges;
    }
  }
  std::int64_t added = 0;
  for (const Vertices& attach : plan.gadgets) {
    added += 1 + static_cast<std::int64_t>(attach.size());
  }
  return added - static_cast<std::int64_t>(plan.removed.size()) -
         removed_edges;
}

// Fills in the annotated forcing: centers join the solution and are deleted,
// their surviving neighbors become white.
void Force(const Graph& g, const Vertices& centers, Plan& plan) {
  plan.forced = centers;
  Vertices sorted_centers = centers;
  std::sort(sorted_centers.begin(), sorted_centers.end());
  plan.removed = Union(plan.removed, sorted_centers);
  Vertices whiten;
  for (VertexId c : centers) {
    auto nbrs = g.Neighbors(c);
    whiten = Union(whiten, Vertices(nbrs.begin(), nbrs.end()));
  }
  plan.whiten =
      Filter(whiten, [&](VertexId x) { return !Contains(plan.removed, x); });
}

std::optional<Plan> Finish(const Graph& g, Plan plan) {
  plan.delta = PotentialDelta(g, plan);
  if (plan.delta >= 0) return std::nullopt;  // progress guard
  return plan;
}

std::optional<Plan> PlanRule1(const Graph& g, VertexId v, const Mode& mode) {
  TriPartition p = PartitionSingle(g, v);
  bool applicable =
      mode.annotated()
          ? std::any_of(p.prisoners.begin(), p.prisoners.end(),
                        [&](VertexId u) { return g.IsBlack(u); })
          : !p.prisoners.empty();
  if (!applicable) return std::nullopt;

  Plan plan;
  plan.rule = RuleKind::kRule1;
  plan.centers = {v};
  plan.removed = Union(p.guards, p.prisoners);
  if (mode.annotated()) {
    Force(g, {v}, plan);
  } else {
    plan.gadgets = {{v}};
  }
  return Finish(g, std::move(plan));
}

std::optional<Plan> PlanRule2(const Graph& g, VertexId v, VertexId w,
                              const Mode& mode) {
  TriPartition p = PartitionPair(g, v, w);
  // Vertices that must be dominated: every prisoner, or only the black ones.
  Vertices targets =
      mode.annotated()
          ? Filter(p.prisoners, [&](VertexId u) { return g.IsBlack(u); })
          : p.prisoners;
  if (targets.empty()) return std::nullopt;

  auto dominates = [&](VertexId x) {
    return std::all_of(targets.begin(), targets.end(), [&](VertexId t) {
      return t == x || g.HasEdge(x, t);
    });
  };
  if (std::any_of(p.guards.begin(), p.guards.end(), dominates) ||
      std::any_of(p.prisoners.begin(), p.prisoners.end(), dominates)) {
    return std::nullopt;
  }

  // Open neighborhoods here; targets never contain the centers.
  bool by_v = std::all_of(targets.begin(), targets.end(),
                          [&](VertexId t) { return g.HasEdge(v, t); });
  bool by_w = std::all_of(targets.begin(), targets.end(),
                          [&](VertexId t) { return g.HasEdge(w, t); });

  Plan plan;
  plan.centers = {v, w};
  if (by_v && by_w) {
    plan.rule = RuleKind::kRule2Case11;
    plan.removed = Union(p.prisoners, Filter(p.guards, [&](VertexId x) {
                           return g.HasEdge(v, x) && g.HasEdge(w, x);
                         }));
    plan.gadgets = {{v, w}, {v, w}};
  } else if (by_v || by_w) {
    VertexId c = by_v ? v : w;
    plan.rule = by_v ? RuleKind::kRule2Case12 : RuleKind::kRule2Case13;
    plan.removed = Union(p.prisoners, Filter(p.guards, [&](VertexId x) {
                           return g.HasEdge(c, x);
                         }));
    if (mode.annotated()) {
      Force(g, {c}, plan);
    } else {
      plan.gadgets = {{c}};
    }
  } else {
    plan.rule = RuleKind::kRule2Case2;
    plan.removed = Union(p.prisoners, p.guards);
    if (mode.annotated()) {
      Force(g, {v, w}, plan);
    } else {
      plan.gadgets = {{v}, {w}};
    }
  }
  return Finish(g, std::move(plan));
}

bool NeighborsCloseWithout(const Graph& g, VertexId u, VertexId a,
                           VertexId b) {
  if (g.HasEdge(a, b)) return true;
  auto na = g.Neighbors(a);
  auto nb = g.Neighbors(b);
  Vertices common;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                        std::back_inserter(common));
  return std::any_of(common.begin(), common.end(),
                     [u](VertexId c) { return c != u; });
}

std::optional<Plan> PlanWhite(const Graph& g, VertexId u) {
  if (g.IsBlack(u)) return std::nullopt;
  auto nbrs = g.Neighbors(u);
  Plan plan;
  plan.centers = {u};
  plan.removed = {u};
  switch (nbrs.size()) {
    case 0:
    case 1:
      plan.rule = RuleKind::kWhite1;
      break;
    case 2:
      if (!NeighborsCloseWithout(g, u, nbrs[0], nbrs[1])) return std::nullopt;
      plan.rule = RuleKind::kWhite2;
      break;
    case 3: {
      // Three vertices induce a connected subgraph iff they span >= 2 edges.
      int edges = int{g.HasEdge(nbrs[0], nbrs[1])} +
                  int{g.HasEdge(nbrs[0], nbrs[2])} +
                  int{g.HasEdge(nbrs[1], nbrs[2])};
      if (edges < 2) return std::nullopt;
      plan.rule = RuleKind::kWhite3;
      break;
    }
    default:
      return std::nullopt;
  }
  return Finish(g, std::move(plan));
}

RuleEvent Apply(Graph& g, Plan plan) {
  RuleEvent event;
  event.rule = plan.rule;
  event.centers = std::move(plan.centers);
  event.forced = std::move(plan.forced);
  event.delta_potential = plan.delta;
  for (VertexId x : plan.whiten) g.SetColor(x, Color::kWhite);
  for (VertexId x : plan.removed) g.RemoveVertex(x);
  for (const Vertices& attach : plan.gadgets) {
    VertexId gadget = g.AddVertex(Color::kBlack, Origin::kGadget);
    for (VertexId c : attach) g.AddEdge(gadget, c);
    event.added_gadgets.push_back(gadget);
  }
  event.removed = std::move(plan.removed);
  return event;
}

void RequireLive(const Graph& g, VertexId v) {
  if (!g.Contains(v)) g.Neighbors(v);  // throws the canonical GraphError
}

void RequireColorsFit(const Graph& g, const Mode& mode) {
  mode.Validate();
  if (!mode.annotated() && g.CountVertices(Color::kWhite) != 0) {
    throw std::invalid_argument(
        "gadget mode reduces plain dominating set; graph has white vertices");
  }
}

class Scheduler {
 public:
  Scheduler(Graph& g, const Mode& mode, const ReduceOptions& options)
      : g_(g), mode_(mode), options_(options) {
    if (options.shuffle_seed) rng_.seed(*options.shuffle_seed);
  }

  std::vector<RuleEvent> Run() {
    bool progress = true;
    while (progress) {
      progress = ExhaustRule1();
      progress = SweepRule2() || progress;
      if (mode_.extra_rules) progress = SweepWhite() || progress;
    }
    return std::move(events_);
  }

 private:
  Vertices VisitOrder(Vertices order) {
    if (options_.shuffle_seed) ShuffleInPlace(order, rng_);
    return order;
  }

  void Record(RuleEvent event) { events_.push_back(std::move(event)); }

  bool ExhaustRule1() {
    bool any = false;
    bool changed = true;
    while (changed) {
      changed = false;
      for (VertexId v : VisitOrder(g_.Vertices())) {
        if (!g_.Contains(v)) continue;
        if (auto event = TryRule1(g_, v, mode_)) {
          Record(std::move(*event));
          changed = true;
        }
      }
      any = any || changed;
    }
    return any;
  }

  Vertices PairCandidates(VertexId v) const {
    Vertices pool = options_.pair_scope == PairScope::kAllPairs
                        ? g_.Vertices()
                        : g_.Ball(v, 3);
    return Filter(pool, [v](VertexId w) { return v < w; });
  }

  bool SweepRule2() {
    bool any = false;
    for (VertexId v : VisitOrder(g_.Vertices())) {
      if (!g_.Contains(v)) continue;
      for (VertexId w : VisitOrder(PairCandidates(v))) {
        if (!g_.Contains(v)) break;
        if (!g_.Contains(w)) continue;
        if (auto event = TryRule2(g_, v, w, mode_)) {
          Record(std::move(*event));
          ExhaustRule1();
          any = true;
        }
      }
    }
    return any;
  }

  bool SweepWhite() {
    bool any = false;
    for (VertexId u : VisitOrder(g_.Vertices())) {
      if (!g_.Contains(u)) continue;
      if (auto event = TryWhiteRules(g_, u)) {
        Record(std::move(*event));
        any = true;
      }
    }
    return any;
  }

  Graph& g_;
  const Mode& mode_;
  const ReduceOptions& options_;
  std::mt19937_64 rng_;
  std::vector<RuleEvent> events_;
};

}  // namespace

void Mode::Validate() const {
  if (extra_rules && kind != ReductionKind::kAnnotated) {
    throw std::invalid_argument("extra rules require annotated mode");
  }
}

std::string_view RuleName(RuleKind rule) {
  switch (rule) {
    case RuleKind::kRule1:
      return "R1";
    case RuleKind::kRule2Case11:
      return "R2_1_1";
    case RuleKind::kRule2Case12:
      return "R2_1_2";
    case RuleKind::kRule2Case13:
      return "R2_1_3";
    case RuleKind::kRule2Case2:
      return "R2_2";
    case RuleKind::kWhite1:
      return "W1";
    case RuleKind::kWhite2:
      return "W2";
    case RuleKind::kWhite3:
      return "W3";
  }
  return "?";
}

std::optional<RuleEvent> TryRule1(Graph& g, VertexId v, const Mode& mode) {
  RequireLive(g, v);
  auto plan = PlanRule1(g, v, mode);
  if (!plan) return std::nullopt;
  return Apply(g, std::move(*plan));
}

std::optional<RuleEvent> TryRule2(Graph& g, VertexId v, VertexId w,
                                  const Mode& mode) {
  RequireLive(g, v);
  RequireLive(g, w);
  auto plan = PlanRule2(g, v, w, mode);
  if (!plan) return std::nullopt;
  return Apply(g, std::move(*plan));
}

std::optional<RuleEvent> TryWhiteRules(Graph& g, VertexId u) {
  RequireLive(g, u);
  auto plan = PlanWhite(g, u);
  if (!plan) return std::nullopt;
  return Apply(g, std::move(*plan));
}

ReductionResult Reduce(Graph g, const Mode& mode,
                       const ReduceOptions& options) {
  RequireColorsFit(g, mode);
  auto start = std::chrono::steady_clock::now();

  ReductionResult result;
  ReductionStats& stats = result.stats;
  stats.vertices_before = g.VertexCount();
  stats.edges_before = g.EdgeCount();
  stats.original_vertices_before = g.CountVertices(Origin::kOriginal);

  result.events = Scheduler(g, mode, options).Run();

  for (const RuleEvent& event : result.events) {
    ++stats.rule_counts[static_cast<std::size_t>(event.rule)];
    result.forced.insert(result.forced.end(), event.forced.begin(),
                         event.forced.end());
  }
  std::sort(result.forced.begin(), result.forced.end());
  stats.vertices_after = g.VertexCount();
  stats.edges_after = g.EdgeCount();
  stats.original_vertices_after = g.CountVertices(Origin::kOriginal);
  result.graph = std::move(g);
  stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return result;
}

bool IsReduced(const Graph& g, const Mode& mode) {
  RequireColorsFit(g, mode);
  Vertices vertices = g.Vertices();
  for (VertexId v : vertices) {
    if (PlanRule1(g, v, mode)) return false;
  }
  // Rule 1 is exhausted here, so pairs further apart than three never apply.
  for (VertexId v : vertices) {
    for (VertexId w : g.Ball(v, 3)) {
      if (v < w && PlanRule2(g, v, w, mode)) return false;
    }
  }
  if (mode.extra_rules) {
    for (VertexId u : vertices) {
      if (PlanWhite(g, u)) return false;
    }
  }
  return true;
}

std::vector<VertexId> LiftSolution(const ReductionResult& result,
                                   std::span<const VertexId> kernel_solution) {
  Vertices solution(kernel_solution.begin(), kernel_solution.end());
  for (auto it = result.events.rbegin(); it != result.events.rend(); ++it) {
    const RuleEvent& event = *it;
    std::unordered_map<VertexId, VertexId> stand_in;
    const auto& gadgets = event.added_gadgets;
    for (std::size_t i = 0; i < gadgets.size(); ++i) {
      VertexId center;
      switch (event.rule) {
        case RuleKind::kRule2Case13:
          center = event.centers[1];
          break;
        case RuleKind::kRule2Case11:
        case RuleKind::kRule2Case2:
          center = event.centers[i];
          break;
        default:
          center = event.centers[0];
          break;
      }
      stand_in.emplace(gadgets[i], center);
    }
    for (VertexId& x : solution) {
      if (auto found = stand_in.find(x); found != stand_in.end()) {
        x = found->second;
      }
    }
    solution.insert(solution.end(), event.forced.begin(), event.forced.end());
  }
  std::sort(solution.begin(), solution.end());
  solution.erase(std::unique(solution.begin(), solution.end()),
                 solution.end());
  return solution;
}

}  // namespace dskernel
