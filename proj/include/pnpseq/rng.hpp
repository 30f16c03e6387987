// Copyright 2026 The pnpseq Authors
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

#ifndef PNPSEQ_RNG_HPP_
#define PNPSEQ_RNG_HPP_

#include <cstdint>
#include <random>

namespace pnpseq {

// Named streams so spawning and per-instance draws never share state.
enum class Stream : std::uint64_t {
  kSpawn = 1,
  kInstance = 2,
  kStudy = 3,
};

// std::mt19937_64 keyed by (seed, stream, index) through SplitMix64.
// The standard distributions are implementation defined, so the draws below
// are written out to keep results identical across standard libraries.
class Rng {
 public:
  Rng(std::uint64_t seed, Stream stream, std::uint64_t index = 0);

  std::uint64_t next_u64() { return engine_(); }
  // [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Rate lambda > 0.
  double exponential(double lambda);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace pnpseq

#endif  // PNPSEQ_RNG_HPP_
