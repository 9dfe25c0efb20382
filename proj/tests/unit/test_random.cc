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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "noonforge/random.h"

namespace noonforge {
namespace {

// Known-answer vectors published with the Random123 reference implementation.
TEST(Philox, KnownAnswerZero) {
    PhiloxCounter out = philox4x32({0, 0, 0, 0}, {0, 0});
    EXPECT_EQ(out, (PhiloxCounter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
}

TEST(Philox, KnownAnswerAllOnes) {
    PhiloxCounter out = philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu});
    EXPECT_EQ(out, (PhiloxCounter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
}

TEST(Philox, KnownAnswerPiDigits) {
    PhiloxCounter out = philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u});
    EXPECT_EQ(out, (PhiloxCounter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(CounterRng, PureFunctionOfCounter) {
    CounterRng a(42, 3);
    CounterRng b(42, 3);
    EXPECT_EQ(a.block(17), b.block(17));
    EXPECT_NE(a.block(17), a.block(18));
    EXPECT_NE(a.block(17), CounterRng(42, 4).block(17));
    EXPECT_NE(a.block(17), CounterRng(43, 3).block(17));
}

TEST(CounterRng, UniformsInOpenInterval) {
    EXPECT_GT(uniform_open01(0), 0.0);
    EXPECT_LT(uniform_open01(~std::uint64_t{0}), 1.0);
    CounterRng rng(7);
    for (std::uint64_t i = 0; i < 10000; ++i) {
        auto [u, v] = rng.uniforms(i);
        EXPECT_GT(u, 0.0);
        EXPECT_LT(u, 1.0);
        EXPECT_GT(v, 0.0);
        EXPECT_LT(v, 1.0);
    }
}

TEST(CounterRng, NormalMoments) {
    CounterRng rng(2024);
    const int blocks = 200000;
    double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0;
    for (int i = 0; i < blocks; ++i) {
        auto [x, y] = rng.normals(static_cast<std::uint64_t>(i));
        for (double z : {x, y}) {
            s1 += z;
            s2 += z * z;
            s3 += z * z * z;
            s4 += z * z * z * z;
        }
    }
    const double n = 2.0 * blocks;
    // Standard errors: 1/sqrt(n), sqrt(2/n), sqrt(15/n), sqrt(96/n); five of each.
    EXPECT_NEAR(s1 / n, 0.0, 5.0 / std::sqrt(n));
    EXPECT_NEAR(s2 / n, 1.0, 5.0 * std::sqrt(2.0 / n));
    EXPECT_NEAR(s3 / n, 0.0, 5.0 * std::sqrt(15.0 / n));
    EXPECT_NEAR(s4 / n, 3.0, 5.0 * std::sqrt(96.0 / n));
}

TEST(RandomStream, ReproducibleSequence) {
    RandomStream a(5);
    RandomStream b(5);
    for (int i = 0; i < 100; ++i) {
        EXPECT_EQ(a.uniform(), b.uniform());
        EXPECT_EQ(a.normal(), b.normal());
    }
}

TEST(CellSeed, DistinctAcrossCells) {
    std::set<std::uint64_t> seen;
    for (int n = 0; n <= 40; ++n) {
        for (double p : {1.0, 2.0, 3.0, 5.0, 15.0, 50.0}) {
            seen.insert(cell_seed(0, n, p));
        }
    }
    EXPECT_EQ(seen.size(), 41u * 6u);
    EXPECT_EQ(cell_seed(9, 3, 2.0), cell_seed(9, 3, 2.0));
    EXPECT_NE(cell_seed(9, 3, 2.0), cell_seed(10, 3, 2.0));
    EXPECT_NE(splitmix64(0), splitmix64(1));
}

}  // namespace
}  // namespace noonforge
