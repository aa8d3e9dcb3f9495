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

#include "dskernel/report.hpp"

#include <unordered_set>

#include "dskernel/solver.hpp"

namespace dskernel {

std::size_t InputVerticesRemoved(const ReductionResult& result) {
  std::unordered_set<VertexId> gadgets;
  std::size_t removed = 0;
  for (const RuleEvent& event : result.events) {
    for (VertexId x : event.removed) {
      if (!gadgets.contains(x)) ++removed;
    }
    gadgets.insert(event.added_gadgets.begin(), event.added_gadgets.end());
  }
  return removed;
}

BenchRecord MakeRecord(std::string instance_id, const ReductionResult& result,
                       std::optional<std::size_t> gamma) {
  const ReductionStats& s = result.stats;
  BenchRecord r;
  r.instance_id = std::move(instance_id);
  r.n_before = s.vertices_before;
  r.m_before = s.edges_before;
  r.n_after = s.vertices_after;
  r.m_after = s.edges_after;
  r.forced_count = result.forced.size();
  r.rule_counts = s.rule_counts;
  r.elapsed_ms = s.elapsed_ms;
  r.gamma = gamma;
  if (r.n_before > 0) {
    r.pct_vertices_removed = 100.0 *
                             static_cast<double>(InputVerticesRemoved(result)) /
                             static_cast<double>(r.n_before);
  }
  if (r.m_before > 0) {
    r.pct_edges_removed = 100.0 *
                          (static_cast<double>(r.m_before) -
                           static_cast<double>(r.m_after)) /
                          static_cast<double>(r.m_before);
  }
  if (gamma && *gamma > 0) {
    r.pct_ds_fixed = 100.0 * static_cast<double>(r.forced_count) /
                     static_cast<double>(*gamma);
  }
  return r;
}

std::optional<std::size_t> OracleGamma(const ReductionResult& result) {
  if (result.graph.VertexCount() > kBruteForceVertexLimit) return std::nullopt;
  return result.forced.size() + BruteForceGamma(result.graph).gamma;
}

nlohmann::json ToJson(const BenchRecord& record) {
  nlohmann::json counts = nlohmann::json::object();
  for (RuleKind rule : kAllRuleKinds) {
    counts[std::string(RuleName(rule))] =
        record.rule_counts[static_cast<std::size_t>(rule)];
  }
  nlohmann::json j;
  j["instance_id"] = record.instance_id;
  j["n_before"] = record.n_before;
  j["m_before"] = record.m_before;
  j["n_after"] = record.n_after;
  j["m_after"] = record.m_after;
  j["forced_count"] = record.forced_count;
  j["rule_counts"] = std::move(counts);
  j["elapsed_ms"] = record.elapsed_ms;
  j["gamma"] =
      record.gamma ? nlohmann::json(*record.gamma) : nlohmann::json(nullptr);
  j["pct_vertices_removed"] = record.pct_vertices_removed;
  j["pct_edges_removed"] = record.pct_edges_removed;
  j["pct_ds_fixed"] =
      record.pct_ds_fixed ? nlohmann::json(*record.pct_ds_fixed)
                          : nlohmann::json(nullptr);
  return j;
}

}  // namespace dskernel
