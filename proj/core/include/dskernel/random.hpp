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

#ifndef DSKERNEL_RANDOM_HPP_
#define DSKERNEL_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace dskernel {

// The standard distributions are implementation-defined, so seeded instances
// would differ between standard libraries. These helpers only rely on the
// engine output, which mt19937_64 pins down exactly.

// SplitMix64 finalizer; used to derive independent per-instance seeds.
inline std::uint64_t MixSeed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  return MixSeed(MixSeed(seed) ^ MixSeed(index + 0x632be59bd9b4e019ULL));
}

// Uniform integer in [0, bound), bound > 0. Rejection sampling, no modulo
// bias.
inline std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Uniform integer in [lo, hi].
inline std::uint64_t UniformInRange(std::mt19937_64& rng, std::uint64_t lo,
                                    std::uint64_t hi) {
  return lo + UniformBelow(rng, hi - lo + 1);
}

template <typename T>
void ShuffleInPlace(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(UniformBelow(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace dskernel

#endif  // DSKERNEL_RANDOM_HPP_
