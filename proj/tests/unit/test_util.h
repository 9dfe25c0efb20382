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


// Shared helpers for the unit tests.

#ifndef NOONFORGE_TESTS_TEST_UTIL_H
#define NOONFORGE_TESTS_TEST_UTIL_H

#include <random>
#include <string>
#include <vector>

#include "noonforge/errors.h"
#include "noonforge/fock.h"

namespace noonforge::testing {

inline CVector random_vector(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    CVector v(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = Complex(g(rng), g(rng));
    }
    return v;
}

inline StateVector random_state(const ModeLayout &layout, std::mt19937_64 &rng) {
    return StateVector(layout, random_vector(layout.dimension(), rng)).normalized();
}

/// Random full-rank density operator: G G^dagger / Tr.
inline DensityOperator random_density(const ModeLayout &layout, std::mt19937_64 &rng) {
    const auto d = static_cast<Eigen::Index>(layout.dimension());
    CMatrix g(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        g.col(j) = random_vector(layout.dimension(), rng);
    }
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace();
    return DensityOperator(layout, 0.5 * (rho + rho.adjoint()));
}

inline double max_abs(const CMatrix &m) { return m.cwiseAbs().maxCoeff(); }

/// Collects warnings for the lifetime of the object.
class WarningCapture {
   public:
    WarningCapture() {
        set_warning_handler([this](std::string_view m) { messages.emplace_back(m); });
    }
    ~WarningCapture() { set_warning_handler(nullptr); }
    std::vector<std::string> messages;
};

}  // namespace noonforge::testing

#endif
