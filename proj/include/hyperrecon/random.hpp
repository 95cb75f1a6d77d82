// Copyright 2026 The Authors.
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

#ifndef HYPERRECON_RANDOM_HPP_
#define HYPERRECON_RANDOM_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace hyperrecon {

using Rng = std::mt19937_64;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from a master seed and a path of
// stream identifiers, e.g. derive_seed(seed, {kSampler, cell, clique}).
inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = mix64(seed);
  for (auto p : path) s = mix64(s ^ mix64(p + 0x632BE59BD9B4E019ULL));
  return s;
}

// Uniform double in [0, 1) from the top 53 bits; identical on every
// platform, unlike std::uniform_real_distribution.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n) by rejection, platform independent.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// Stream identifiers for derive_seed.
enum class Stream : std::uint64_t {
  kSplit = 1,
  kReindex = 2,
  kSampler = 3,
  kInit = 4,
  kAblation = 5,
  kTuning = 6,
};

inline std::uint64_t derive_seed(std::uint64_t seed, Stream stream) {
  return derive_seed(seed, {static_cast<std::uint64_t>(stream)});
}

}  // namespace hyperrecon

#endif  // HYPERRECON_RANDOM_HPP_
