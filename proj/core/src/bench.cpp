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

#include "dskernel/bench.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dskernel {
namespace {

std::string InstanceId(std::uint32_t n, std::uint32_t k) {
  std::ostringstream os;
  os << 'n' << n << '-' << std::setw(3) << std::setfill('0') << k;
  return os.str();
}

nlohmann::json Optional(const std::optional<double>& x) {
  return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

}  // namespace

BenchRecord RunInstance(const GenSpec& spec, std::string instance_id,
                        const Mode& mode, bool timing) {
  ReductionResult result = Reduce(RandomPlanar(spec), mode);
  if (!timing) result.stats.elapsed_ms = 0.0;
  return MakeRecord(std::move(instance_id), result, OracleGamma(result));
}

BenchReport RunBench(const BenchConfig& config) {
  if (config.sizes.empty()) throw std::invalid_argument("no sizes given");
  config.mode.Validate();
  std::vector<GenSpec> specs =
      SampleSets(config.seed, config.sizes, config.count);

  BenchReport report;
  report.config = config;
  report.records.resize(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      report.records[i] = RunInstance(
          specs[i],
          InstanceId(specs[i].n, static_cast<std::uint32_t>(i % config.count)),
          config.mode, config.timing);
    }
  };
  unsigned threads = std::max(1u, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  report.summary = Summarize(config.sizes, report.records);
  return report;
}

std::vector<SizeSummary> Summarize(const std::vector<std::uint32_t>& sizes,
                                   const std::vector<BenchRecord>& records) {
  std::vector<SizeSummary> out;
  for (std::uint32_t n : sizes) {
    SizeSummary s;
    s.n = n;
    double sparse_sum = 0.0;
    double fixed_sum = 0.0;
    for (const BenchRecord& r : records) {
      if (r.n_before != n) continue;
      ++s.instances;
      s.mean_pct_vertices_removed += r.pct_vertices_removed;
      s.mean_pct_edges_removed += r.pct_edges_removed;
      s.mean_elapsed_ms += r.elapsed_ms;
      if (r.m_before <= 2 * r.n_before) {
        ++s.sparse_instances;
        sparse_sum += r.pct_vertices_removed;
      }
      if (r.pct_ds_fixed) {
        ++s.gamma_instances;
        fixed_sum += *r.pct_ds_fixed;
      }
    }
    if (s.instances > 0) {
      double k = static_cast<double>(s.instances);
      s.mean_pct_vertices_removed /= k;
      s.mean_pct_edges_removed /= k;
      s.mean_elapsed_ms /= k;
    }
    if (s.sparse_instances > 0) {
      s.mean_pct_vertices_removed_sparse =
          sparse_sum / static_cast<double>(s.sparse_instances);
    }
    if (s.gamma_instances > 0) {
      s.mean_pct_ds_fixed = fixed_sum / static_cast<double>(s.gamma_instances);
    }
    out.push_back(s);
  }
  return out;
}

nlohmann::json ToJson(const SizeSummary& s) {
  return {
      {"n", s.n},
      {"instances", s.instances},
      {"mean_pct_vertices_removed", s.mean_pct_vertices_removed},
      {"mean_pct_edges_removed", s.mean_pct_edges_removed},
      {"mean_elapsed_ms", s.mean_elapsed_ms},
      {"sparse_instances", s.sparse_instances},
      {"mean_pct_vertices_removed_sparse",
       Optional(s.mean_pct_vertices_removed_sparse)},
      {"gamma_instances", s.gamma_instances},
      {"mean_pct_ds_fixed", Optional(s.mean_pct_ds_fixed)},
  };
}

nlohmann::json ToJson(const BenchReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const BenchRecord& r : report.records) records.push_back(ToJson(r));
  nlohmann::json summary = nlohmann::json::array();
  for (const SizeSummary& s : report.summary) summary.push_back(ToJson(s));
  const BenchConfig& c = report.config;
  return {
      {"config",
       {{"sizes", c.sizes},
        {"count", c.count},
        {"seed", c.seed},
        {"mode", c.mode.annotated() ? "annotated" : "gadget"},
        {"extra_rules", c.mode.extra_rules}}},
      {"summary", std::move(summary)},
      {"records", std::move(records)},
  };
}

void WriteTable(const BenchReport& report, std::ostream& out) {
  auto pct = [](const std::optional<double>& x) {
    std::ostringstream os;
    if (x) {
      os << std::fixed << std::setprecision(2) << *x;
    } else {
      os << "-";
    }
    return os.str();
  };
  out << std::left << std::setw(8) << "n" << std::right << std::setw(10)
      << "count" << std::setw(12) << "%V removed" << std::setw(12)
      << "%E removed" << std::setw(12) << "ms (mean)" << std::setw(14)
      << "%V sparse" << std::setw(12) << "%DS fixed" << '\n';
  for (const SizeSummary& s : report.summary) {
    out << std::left << std::setw(8) << s.n << std::right << std::setw(10)
        << s.instances << std::fixed << std::setprecision(2) << std::setw(12)
        << s.mean_pct_vertices_removed << std::setw(12)
        << s.mean_pct_edges_removed << std::setw(12) << s.mean_elapsed_ms
        << std::setw(14) << pct(s.mean_pct_vertices_removed_sparse)
        << std::setw(12) << pct(s.mean_pct_ds_fixed) << '\n';
  }
}

}  // namespace dskernel
