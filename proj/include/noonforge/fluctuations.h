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


// Sensitivity of the N00N protocol to Gaussian fluctuations of the beam
// splitter angle (lambda = pi/4 + d_lambda) and the controlled phase
// (theta = pi + d_theta), evaluated on the state right after the
// controlled-phase gate:
//
//   |Phi(lambda, theta)> = C(theta) B(lambda) |N>_1 |0>_a (|0>_2 + |1>_2)/sqrt(2).
//
// The overlap with the ideal state reduces to a single sum,
//
//   <Phi(pi/4, pi)|Phi(lambda, theta)> =
//       sum_k C(N,k) / (2 * 2^(N/2)) (1 + e^{i k d_theta}) sin^k(lambda) cos^(N-k)(lambda),
//
// whose stochastic average is available in closed form as a triple sum.

#ifndef NOONFORGE_FLUCTUATIONS_H
#define NOONFORGE_FLUCTUATIONS_H

#include <complex>
#include <cstdint>
#include <vector>

namespace noonforge {

/// Variances of d_lambda and d_theta in rad^2.
struct FluctuationSpec {
    double v_lambda = 0.0;
    double v_theta = 0.0;

    /// A standard deviation of M percent of the nominal value:
    /// V_theta = (M pi / 100)^2, V_lambda = (M pi / 400)^2.
    static FluctuationSpec from_percent(double percent);

    /// Throws std::invalid_argument on negative or non-finite variances.
    void validate() const;
};

/// E[d^n] for d ~ N(0, v): 0 for odd n, (n-1)!! v^(n/2) for even n.
double gaussian_moment(int n, double v);

/// E[exp(i n d)] = exp(-n^2 v / 2).
double avg_exp(int n, double v);

/// E[sin^n(lambda) cos^m(lambda)] for lambda = pi/4 + d, d ~ N(0, v), as a
/// finite double sum over exponentials. The result is real up to rounding.
std::complex<double> avg_sin_cos(int n, int m, double v);

/// Stochastic average of the overlap, via the triple sum. Binomials come
/// from log-gamma and the terms are summed with compensation, so N of a
/// few hundred is fine.
std::complex<double> analytic_avg_overlap(int n, const FluctuationSpec &spec);

/// Overlap for one realization of the fluctuations, O(N).
std::complex<double> sample_overlap(int n, double d_lambda, double d_theta);

struct FidelityResult {
    int n = 0;
    double percent = 0.0;  ///< NaN when the fluctuations were given as variances
    FluctuationSpec spec;
    std::complex<double> analytic{1.0, 0.0};
    double analytic_abs = 1.0;
    double mc_mean_abs = 1.0;  ///< mean of |overlap|
    double mc_stderr = 0.0;    ///< standard error of mc_mean_abs
    std::complex<double> mc_mean_complex{1.0, 0.0};
    /// Standard error of the complex mean, sqrt(se_re^2 + se_im^2).
    double mc_complex_stderr = 0.0;
    long samples = 0;
    std::uint64_t seed = 0;
};

/// Monte Carlo over `samples` draws; sample i uses Philox block i of `seed`.
/// Throws std::invalid_argument if samples < 1.
FidelityResult mc_fidelity(int n, const FluctuationSpec &spec, long samples, std::uint64_t seed);

inline const std::vector<double> kDefaultPercents{1.0, 2.0, 3.0, 5.0, 15.0, 50.0};

struct SweepOptions {
    int n_min = 1;
    int n_max = 40;
    std::vector<double> percents = kDefaultPercents;
    long samples = 10000;
    std::uint64_t seed = 0;
    int threads = 1;
};

/// Rows ordered by N, then by the order of `percents`. Cell (N, percent)
/// draws from cell_seed(seed, N, percent), so the table does not depend on
/// the thread count.
std::vector<FidelityResult> fidelity_sweep(const SweepOptions &options);
std::vector<FidelityResult> fidelity_sweep(int n_max, const std::vector<double> &percents, long samples,
                                           std::uint64_t seed);

}  // namespace noonforge

#endif
