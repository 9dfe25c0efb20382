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


// Adiabatic elimination by the projection-operator method, evaluated
// numerically, and a co-evolution check of effective models.
//
// With P the projector onto the slow subspace, Q = 1 - P and
//   H1~(tau) = exp(-i H0 tau) H1 exp(i H0 tau),
// the second-order effective Hamiltonian is
//   H_eff(t) = P H0 P + int_0^t dtau/i  P H1 H1~(tau) P.
// Before integrating, P H1 P is moved from H1 into H0.

#ifndef NOONFORGE_ELIMINATION_H
#define NOONFORGE_ELIMINATION_H

#include <vector>

#include "noonforge/fock.h"
#include "noonforge/params.h"

namespace noonforge {

enum class ProjectorAverage {
    /// The integral up to t as written. Keeps a term oscillating at the
    /// P-Q gap that never decays.
    instantaneous,
    /// Time average of H_eff over [0, t], i.e. the integrand weighted by
    /// (1 - tau/t). The oscillating remainder falls off as 1/(gap * t).
    window,
};

struct ProjectorOptions {
    int quad_points = 64;          ///< initial Gauss-Legendre node count
    double quad_tolerance = 1e-10; ///< relative change that stops doubling
    int max_quad_points = 1 << 16;
    ProjectorAverage average = ProjectorAverage::window;
};

struct EffectiveHamiltonian {
    OperatorMatrix raw;         ///< generally not Hermitian
    OperatorMatrix hermitized;  ///< (raw + raw^dag) / 2
    double residual;            ///< ||(raw - raw^dag) / 2||_inf
    int quad_points;            ///< nodes used in the converged rule
    bool converged;
};

/// Throws std::invalid_argument if `p` is not a Hermitian projector within
/// 1e-12 or the operands live on different layouts. Warns when P H0 Q is
/// not negligible.
EffectiveHamiltonian effective_hamiltonian_projector(const OperatorMatrix &h0, const OperatorMatrix &h1,
                                                     const OperatorMatrix &p, double t,
                                                     const ProjectorOptions &options = {});

/// Same integral in closed form (exact for any t); used to validate the
/// quadrature.
CMatrix effective_hamiltonian_closed_form(const OperatorMatrix &h0, const OperatorMatrix &h1,
                                          const OperatorMatrix &p, double t, ProjectorAverage average);

/// Gauss-Legendre nodes and weights on [a, b].
void gauss_legendre(int n, double a, double b, std::vector<double> &nodes, std::vector<double> &weights);

struct EliminationReport {
    std::vector<double> times;
    std::vector<double> infidelity;  ///< 1 - |<psi_full(t)|psi_eff(t)>|
    double mean_infidelity = 0.0;
    double max_infidelity = 0.0;
};

/// Co-evolves psi0 under both Hamiltonians on a quasi-random (golden
/// ratio) grid of `samples` times in (0, t] that always includes t.
/// Uniform grids alias with the exchange oscillation when the detuning
/// ratio is an integer.
EliminationReport verify_elimination(const OperatorMatrix &full_h, const OperatorMatrix &eff_h,
                                     const StateVector &psi0, double t, int samples = 64);

struct CrossKerrCheck {
    double delta2_over_omega;
    double nu_over_delta2;
    double t_pi;  ///< pi / |g_ck|
    /// Fock input |1_a, 1_b2, g>: insensitive to the dropped Stark shift.
    EliminationReport fock;
    /// (|0> + |1>)_a (|0> + |1>)_b2 |g> / 2: also picks up the phase of the
    /// neglected single-mode shifts, so it levels off instead of vanishing.
    EliminationReport superposition;
};

struct CrossKerrCheckOptions {
    int cutoff_a = 6;
    int cutoff_b2 = 3;
    int samples = 64;
    /// Coupling that sets delta2 = ratio * reference and the duration
    /// pi / g_ck(reference). Zero means base.omega_rabi. A separate value
    /// allows runs with the actual coupling switched off.
    double omega_reference = 0.0;
};

/// Anti-node Hamiltonian against the cross-Kerr model over one pi cross
/// phase. Omega and eta come from `base`; delta2 and nu are set from the
/// ratios. The layout is (a, b2, ion with 2 levels).
CrossKerrCheck check_cross_kerr_elimination(const PhysicalParams &base, double delta2_over_omega,
                                            double nu_over_delta2, const CrossKerrCheckOptions &options = {});

}  // namespace noonforge

#endif
