// Copyright 2026 The NoonForge Authors
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


// Counter-based random numbers (Philox4x32-10). A draw is a pure function
// of (seed, stream, counter), so parallel sweeps reproduce bit-for-bit
// regardless of scheduling.

#ifndef NOONFORGE_RANDOM_H
#define NOONFORGE_RANDOM_H

#include <array>
#include <cstdint>
#include <utility>

namespace noonforge {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// One Philox4x32 block with 10 rounds.
PhiloxCounter philox4x32(PhiloxCounter counter, PhiloxKey key);

/// SplitMix64 finalizer, used to derive seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Per-cell seed of a sweep: splitmix64 chained over (base, n, bits of percent).
std::uint64_t cell_seed(std::uint64_t base, int n, double percent);

/// Maps 64 random bits to a double in the open interval (0, 1).
double uniform_open01(std::uint64_t bits);

/// Stateless access: the block at index `counter` of stream `stream`
/// under key `seed`.
class CounterRng {
   public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}

    PhiloxCounter block(std::uint64_t counter) const;
    /// Two uniforms in (0, 1) from one block.
    std::pair<double, double> uniforms(std::uint64_t counter) const;
    /// Two independent standard normals from one block (Box-Muller).
    std::pair<double, double> normals(std::uint64_t counter) const;

    std::uint64_t seed() const { return seed_; }

   private:
    std::uint64_t seed_;
    std::uint64_t stream_;
};

/// Sequential convenience wrapper that walks the counter.
class RandomStream {
   public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0) : rng_(seed, stream) {}
    double uniform();
    double normal();

   private:
    CounterRng rng_;
    std::uint64_t counter_ = 0;
    std::array<double, 2> cached_{};
    int cached_count_ = 0;
    bool cached_normal_ = false;
};

}  // namespace noonforge

#endif
