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

#ifndef DSKERNEL_BENCH_HPP_
#define DSKERNEL_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "dskernel/plangen.hpp"
#include "dskernel/reduction.hpp"
#include "dskernel/report.hpp"

namespace dskernel {

struct BenchConfig {
  std::vector<std::uint32_t> sizes;
  std::uint32_t count = kInstancesPerSize;
  std::uint64_t seed = 1;
  Mode mode = Mode::Annotated(true);
  unsigned threads = 1;
  // When false, elapsed times are reported as 0 so output is reproducible
  // byte for byte.
  bool timing = true;
};

struct SizeSummary {
  std::uint32_t n = 0;
  std::size_t instances = 0;
  double mean_pct_vertices_removed = 0.0;
  double mean_pct_edges_removed = 0.0;
  double mean_elapsed_ms = 0.0;
  // Instances with m <= 2n.
  std::size_t sparse_instances = 0;
  std::optional<double> mean_pct_vertices_removed_sparse;
  // Instances whose kernel was small enough for the exact oracle.
  std::size_t gamma_instances = 0;
  std::optional<double> mean_pct_ds_fixed;
};

struct BenchReport {
  BenchConfig config;
  std::vector<BenchRecord> records;  // in instance order
  std::vector<SizeSummary> summary;  // in config.sizes order
};

// Generates, reduces and measures one instance.
BenchRecord RunInstance(const GenSpec& spec, std::string instance_id,
                        const Mode& mode, bool timing);

// Deterministic given the config, regardless of `threads`.
BenchReport RunBench(const BenchConfig& config);

std::vector<SizeSummary> Summarize(const std::vector<std::uint32_t>& sizes,
                                   const std::vector<BenchRecord>& records);

nlohmann::json ToJson(const SizeSummary& summary);
nlohmann::json ToJson(const BenchReport& report);
void WriteTable(const BenchReport& report, std::ostream& out);

}  // namespace dskernel

#endif  // DSKERNEL_BENCH_HPP_
