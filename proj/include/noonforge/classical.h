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


// Mean-field (coherent-state) limit of the driven optomechanical system:
//
//   d alpha/dt = -(Gamma + i nu) alpha + i g0 |beta|^2
//   d beta/dt  = -[gamma + i delta1 - i g0 (alpha + alpha*)] beta + i E
//
// with Gamma = gamma_motion and E = pump.

#ifndef NOONFORGE_CLASSICAL_H
#define NOONFORGE_CLASSICAL_H

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "noonforge/params.h"

namespace noonforge {

struct ClassicalState {
    std::complex<double> alpha{0.0, 0.0};
    std::complex<double> beta{0.0, 0.0};
};

/// Right-hand side of the mean-field equations.
ClassicalState classical_rhs(const PhysicalParams &params, const ClassicalState &state);

struct ClassicalSample {
    double t;
    ClassicalState state;
};

struct ClassicalTrajectoryOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int samples = 101;               ///< evenly spaced output points including both ends
    double overflow_guard = 1e150;   ///< |alpha| or |beta| beyond this aborts
};

/// Adaptive integration from t = 0 to t. Throws IntegrationFailure on
/// divergence or step-size underflow.
std::vector<ClassicalSample> classical_trajectory(const PhysicalParams &params, const ClassicalState &initial,
                                                  double t, const ClassicalTrajectoryOptions &options = {});

struct SteadyStateOptions {
    double damping = 0.5;
    int max_iterations = 100000;
    double tolerance = 1e-13;  ///< on the dimensionless residual
};

/// Fixed point of the mean-field equations by damped iteration of
///   alpha = g0 |beta|^2 / (nu - i Gamma),
///   beta  = E / (delta1 - g0 (alpha + alpha*) - i gamma),
/// with a Newton fallback. Throws NoConvergence carrying (alpha, beta).
ClassicalState classical_steady_state(const PhysicalParams &params, const SteadyStateOptions &options = {});

/// Rate scale max(nu, |delta1|, gamma, Gamma) used to make residuals
/// dimensionless.
double classical_rate_scale(const PhysicalParams &params);

/// |rhs| / (rate scale * max(|alpha|, |beta|, 1)).
double steady_state_residual(const PhysicalParams &params, const ClassicalState &state);

/// Pump that makes `beta` the cavity amplitude of a fixed point, i.e. the
/// inverse of the steady-state map. Useful for choosing E from a target
/// photon number and phase.
std::complex<double> pump_for_cavity_amplitude(const PhysicalParams &params, std::complex<double> beta);

struct StabilityReport {
    Eigen::Matrix4cd matrix_m;
    Eigen::Vector4cd eigenvalues;
    bool stable = false;
};

/// Linear stability matrix acting on (d alpha, d alpha*, d beta, d beta*).
Eigen::Matrix4cd stability_matrix(const PhysicalParams &params, const ClassicalState &steady);

/// Throws std::invalid_argument if `steady` is not a fixed point within
/// `fixed_point_tolerance` (dimensionless residual).
StabilityReport stability_analysis(const PhysicalParams &params, const ClassicalState &steady,
                                   double fixed_point_tolerance = 1e-9);

}  // namespace noonforge

#endif
