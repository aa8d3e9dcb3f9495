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

#include "dskernel/verify.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "dskernel/graph_io.hpp"
#include "dskernel/plangen.hpp"
#include "dskernel/random.hpp"
#include "dskernel/solver.hpp"

namespace dskernel {
namespace {

std::filesystem::path Dump(const VerifyCase& c,
                           const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::string name = c.id;
  std::replace_if(
      name.begin(), name.end(),
      [](char ch) { return ch == '/' || ch == '\\' || ch == ' '; }, '_');
  std::filesystem::path path = dir / (name + ".ds");
  std::ofstream out(path);
  out << "c failing instance " << c.id << '\n';
  if (c.seed) out << "c seed " << *c.seed << '\n';
  WriteGraph(c.graph, out);
  return path;
}

VerifyOutcome Check(const VerifyCase& c, const Reducer& reducer) {
  VerifyOutcome o;
  o.id = c.id;
  o.vertices = c.graph.VertexCount();
  if (o.vertices > kBruteForceVertexLimit) {
    o.message = "input exceeds the brute-force limit";
    return o;
  }
  o.gamma = BruteForceGamma(c.graph).gamma;
  ReductionResult reduced = reducer(c.graph);
  o.kernel_vertices = reduced.graph.VertexCount();
  o.forced = reduced.forced.size();
  if (o.kernel_vertices > kBruteForceVertexLimit) {
    o.message = "kernel exceeds the brute-force limit";
    return o;
  }
  o.kernel_gamma = o.forced + BruteForceGamma(reduced.graph).gamma;

  std::ostringstream why;
  bool ok = *o.kernel_gamma == *o.gamma;
  if (!ok) {
    why << "gamma mismatch: input " << *o.gamma << ", reduced "
        << *o.kernel_gamma;
  }
  if (c.planar) {
    o.kernel_bound_ok = o.kernel_vertices <= kPlanarKernelFactor * *o.gamma;
    if (!*o.kernel_bound_ok) {
      why << (ok ? "" : "; ") << "kernel of " << o.kernel_vertices
          << " vertices exceeds " << kPlanarKernelFactor << " * gamma";
      ok = false;
    }
  }
  o.status = ok ? VerifyStatus::kPass : VerifyStatus::kFail;
  o.message = why.str();
  return o;
}

}  // namespace

std::size_t VerifyReport::Count(VerifyStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(),
                    [status](const VerifyOutcome& o) {
                      return o.status == status;
                    }));
}

VerifyReport RunVerification(
    std::span<const VerifyCase> cases, const Reducer& reducer,
    const std::optional<std::filesystem::path>& dump_dir) {
  VerifyReport report;
  for (const VerifyCase& c : cases) {
    VerifyOutcome o = Check(c, reducer);
    if (o.status == VerifyStatus::kFail && dump_dir) o.dump = Dump(c, *dump_dir);
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

std::vector<VerifyCase> RandomPlanarCases(std::uint32_t trials,
                                          std::uint64_t seed,
                                          std::uint32_t max_n) {
  max_n = std::max<std::uint32_t>(max_n, 3);
  std::vector<VerifyCase> cases;
  cases.reserve(trials);
  for (std::uint32_t t = 0; t < trials; ++t) {
    std::uint64_t instance_seed = DeriveSeed(seed, t);
    std::mt19937_64 rng(instance_seed);
    GenSpec spec;
    spec.n = static_cast<std::uint32_t>(UniformInRange(rng, 3, max_n));
    spec.m = static_cast<std::uint32_t>(
        UniformInRange(rng, 0, GenSpec::MaxPlanarEdges(spec.n)));
    spec.seed = rng();
    cases.push_back({"trial-" + std::to_string(t), RandomPlanar(spec), true,
                     instance_seed});
  }
  return cases;
}

}  // namespace dskernel
