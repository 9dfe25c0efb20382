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

// Independent reference computations shared by the unit and acceptance
// suites. Nothing here calls the library routine it is meant to check.

#ifndef NOONFORGE_TESTS_ORACLES_H
#define NOONFORGE_TESTS_ORACLES_H

#include <cmath>
#include <complex>
#include <functional>

#include "noonforge/classical.h"
#include "noonforge/fluctuations.h"
#include "noonforge/fock.h"
#include "noonforge/params.h"
#include "noonforge/protocol.h"

namespace noonforge::oracles {

inline double double_factorial(int n) {
    double r = 1.0;
    for (int k = n; k > 1; k -= 2) {
        r *= k;
    }
    return r;
}

/// E[f(d)] for d ~ N(0, v) by composite Simpson over +-12 sigma.
inline double gaussian_expectation(const std::function<double(double)> &f, double v, int intervals = 4000) {
    if (v == 0.0) {
        return f(0.0);
    }
    const double sigma = std::sqrt(v);
    const double lo = -12.0 * sigma, h = 24.0 * sigma / intervals;
    double sum = 0.0;
    for (int i = 0; i <= intervals; ++i) {
        const double x = lo + i * h;
        const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        sum += w * f(x) * std::exp(-x * x / (2.0 * v));
    }
    return sum * h / 3.0 / std::sqrt(2.0 * kPi * v);
}

/// sum_k (i n)^k E[d^k] / k! with the moments from the double factorial,
/// truncated at order 200.
inline double avg_exp_series(int n, double v) {
    double series = 0.0;
    double scale = 1.0;  // (i n)^k / k! for even k
    for (int k = 0; k <= 200; k += 2) {
        if (k > 0) {
            scale *= -static_cast<double>(n) * n / ((k - 1.0) * k);
        }
        series += scale * double_factorial(k - 1) * std::pow(v, k / 2);
    }
    return series;
}

/// <Phi(pi/4, pi)|Phi(pi/4 + d_lambda, pi + d_theta)> from the gate
/// matrices, with Phi = C(theta) B(lambda) |N>_1 |0>_a (|0>_2 + |1>_2) / sqrt(2).
inline Complex pipeline_overlap(int n, double d_lambda, double d_theta) {
    const ModeLayout layout = make_layout({n + 2, n + 2, 2}, 1);
    StateVector in = (basis_state(layout, {.a = 0, .b1 = n, .b2 = 0}) +
                      basis_state(layout, {.a = 0, .b1 = n, .b2 = 1})) *
                     Complex(1.0 / std::sqrt(2.0));
    auto phi = [&](double lambda, double theta) {
        return gate_controlled_phase(layout, theta).apply(gate_beamsplitter(layout, lambda).apply(in));
    };
    return overlap(phi(kPi / 4, kPi), phi(kPi / 4 + d_lambda, kPi + d_theta));
}

/// (|0>_1 |N>_a + sign i |N>_1 |0>_a) / sqrt(2) at the given ion level.
inline StateVector noon_state(const ModeLayout &layout, int n, double sign, int level) {
    StateVector s = basis_state(layout, {.a = n, .b1 = 0, .level = level}) +
                    basis_state(layout, {.a = 0, .b1 = n, .level = level}) * Complex(0.0, sign);
    return s.normalized();
}

/// Central Wirtinger finite differences of the mean-field equations in the
/// coordinates (alpha, alpha*, beta, beta*).
inline Eigen::Matrix4cd finite_difference_jacobian(const PhysicalParams &p, const ClassicalState &s) {
    auto f = [&](Complex a, Complex b) {
        ClassicalState d = classical_rhs(p, {a, b});
        return Eigen::Vector4cd(d.alpha, std::conj(d.alpha), d.beta, std::conj(d.beta));
    };
    Eigen::Matrix4cd j;
    const Complex i{0.0, 1.0};
    for (int var = 0; var < 2; ++var) {
        const double h = 1e-6 * std::max(1.0, std::abs(var == 0 ? s.alpha : s.beta));
        auto shifted = [&](Complex delta) {
            return var == 0 ? f(s.alpha + delta, s.beta) : f(s.alpha, s.beta + delta);
        };
        Eigen::Vector4cd dx = (shifted(h) - shifted(-h)) / (2.0 * h);
        Eigen::Vector4cd dy = (shifted(i * h) - shifted(-i * h)) / (2.0 * h);
        j.col(2 * var) = 0.5 * (dx - i * dy);
        j.col(2 * var + 1) = 0.5 * (dx + i * dy);
    }
    return j;
}

}  // namespace noonforge::oracles

#endif
