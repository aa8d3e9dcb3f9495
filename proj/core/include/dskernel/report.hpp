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

#ifndef DSKERNEL_REPORT_HPP_
#define DSKERNEL_REPORT_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "dskernel/reduction.hpp"

namespace dskernel {

// Per-instance reduction statistics. Serialized with exactly these field
// names; rule_counts becomes an object keyed by RuleName.
struct BenchRecord {
  std::string instance_id;
  std::size_t n_before = 0;
  std::size_t m_before = 0;
  std::size_t n_after = 0;  // includes gadget vertices
  std::size_t m_after = 0;
  std::size_t forced_count = 0;
  std::array<std::size_t, kRuleKindCount> rule_counts{};
  double elapsed_ms = 0.0;
  std::optional<std::size_t> gamma;
  // Only vertices of the input count as removed; gadgets never do.
  double pct_vertices_removed = 0.0;
  double pct_edges_removed = 0.0;
  // 100 * forced_count / gamma, when gamma is known and positive.
  std::optional<double> pct_ds_fixed;
};

// Input vertices deleted by the events (ids never issued as gadgets).
std::size_t InputVerticesRemoved(const ReductionResult& result);

BenchRecord MakeRecord(std::string instance_id, const ReductionResult& result,
                       std::optional<std::size_t> gamma);

// forced + brute-force gamma of the kernel when the kernel is small enough
// for the exhaustive oracle, nullopt otherwise.
std::optional<std::size_t> OracleGamma(const ReductionResult& result);

nlohmann::json ToJson(const BenchRecord& record);

}  // namespace dskernel

#endif  // DSKERNEL_REPORT_HPP_
