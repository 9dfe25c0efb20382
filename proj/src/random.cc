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


#include "noonforge/random.h"

#include <bit>
#include <cmath>

#include "noonforge/params.h"

namespace noonforge {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t &hi, std::uint32_t &lo) {
    std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

}  // namespace

PhiloxCounter philox4x32(PhiloxCounter c, PhiloxKey k) {
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, c[0], hi0, lo0);
        mulhilo(kMul1, c[2], hi1, lo1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
        k[0] += kWeyl0;
        k[1] += kWeyl1;
    }
    return c;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t cell_seed(std::uint64_t base, int n, double percent) {
    std::uint64_t h = splitmix64(base);
    h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(n)));
    return splitmix64(h ^ std::bit_cast<std::uint64_t>(percent));
}

// 52 bits plus a half step keep both ends representable: [2^-53, 1 - 2^-53].
double uniform_open01(std::uint64_t bits) { return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52; }

PhiloxCounter CounterRng::block(std::uint64_t counter) const {
    PhiloxCounter c{static_cast<std::uint32_t>(counter), static_cast<std::uint32_t>(counter >> 32),
                    static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
    PhiloxKey k{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)};
    return philox4x32(c, k);
}

std::pair<double, double> CounterRng::uniforms(std::uint64_t counter) const {
    PhiloxCounter b = block(counter);
    std::uint64_t x = (static_cast<std::uint64_t>(b[1]) << 32) | b[0];
    std::uint64_t y = (static_cast<std::uint64_t>(b[3]) << 32) | b[2];
    return {uniform_open01(x), uniform_open01(y)};
}

std::pair<double, double> CounterRng::normals(std::uint64_t counter) const {
    auto [u1, u2] = uniforms(counter);
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = kTwoPi * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

double RandomStream::uniform() {
    if (cached_count_ == 0 || cached_normal_) {
        auto [x, y] = rng_.uniforms(counter_++);
        cached_ = {y, x};
        cached_count_ = 2;
        cached_normal_ = false;
    }
    return cached_[static_cast<std::size_t>(--cached_count_)];
}

double RandomStream::normal() {
    if (cached_count_ == 0 || !cached_normal_) {
        auto [x, y] = rng_.normals(counter_++);
        cached_ = {y, x};
        cached_count_ = 2;
        cached_normal_ = true;
    }
    return cached_[static_cast<std::size_t>(--cached_count_)];
}

}  // namespace noonforge
