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

#ifndef DSKERNEL_VERIFY_HPP_
#define DSKERNEL_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dskernel/graph.hpp"
#include "dskernel/reduction.hpp"

namespace dskernel {

// Worst-case planar kernel size per unit of domination number.
inline constexpr std::size_t kPlanarKernelFactor = 335;

struct VerifyCase {
  std::string id;
  Graph graph;
  bool planar = false;
  std::optional<std::uint64_t> seed;
};

enum class VerifyStatus { kPass, kFail, kSkipped };

struct VerifyOutcome {
  std::string id;
  VerifyStatus status = VerifyStatus::kSkipped;
  std::size_t vertices = 0;
  std::size_t kernel_vertices = 0;
  std::size_t forced = 0;
  std::optional<std::size_t> gamma;         // of the input
  std::optional<std::size_t> kernel_gamma;  // forced + gamma of the kernel
  std::optional<bool> kernel_bound_ok;      // planar inputs only
  std::string message;
  std::optional<std::filesystem::path> dump;
};

struct VerifyReport {
  std::vector<VerifyOutcome> outcomes;

  std::size_t Count(VerifyStatus status) const;
  bool AllPassed() const { return Count(VerifyStatus::kFail) == 0; }
};

using Reducer = std::function<ReductionResult(const Graph&)>;

// Oracle-equivalence protocol: gamma(G) by brute force must equal
// |forced| + gamma(kernel), and planar kernels must satisfy
// |V(kernel)| <= 335 * gamma(G). Inputs beyond the brute-force limit are
// skipped. Failing inputs are written to `dump_dir` when given.
VerifyReport RunVerification(std::span<const VerifyCase> cases,
                             const Reducer& reducer,
                             const std::optional<std::filesystem::path>&
                                 dump_dir);

// `trials` seeded random planar instances with 3 <= n <= max_n.
std::vector<VerifyCase> RandomPlanarCases(std::uint32_t trials,
                                          std::uint64_t seed,
                                          std::uint32_t max_n = 16);

}  // namespace dskernel

#endif  // DSKERNEL_VERIFY_HPP_
