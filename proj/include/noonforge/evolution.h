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


// Unitary and Lindblad time evolution with piecewise-constant Hamiltonians.
//
// The master equation is
//
//   d rho/dt = -i [H, rho] + sum_k rate_k D[J_k] rho,
//   D[J] rho = 2 J rho J^dag - J^dag J rho - rho J^dag J,
//
// so a channel with rate r damps the energy of its mode at 2r.

#ifndef NOONFORGE_EVOLUTION_H
#define NOONFORGE_EVOLUTION_H

#include <string>
#include <vector>

#include "noonforge/fock.h"
#include "noonforge/params.h"

namespace noonforge {

/// exp(-i H t) psi0. Throws std::invalid_argument unless H is flagged
/// Hermitian (see OperatorMatrix::as_hermitian).
StateVector evolve_unitary(const OperatorMatrix &hamiltonian, const StateVector &psi0, double t);

/// Diagonalizes H once and propagates states to arbitrary times.
class UnitaryEvolver {
   public:
    explicit UnitaryEvolver(const OperatorMatrix &hamiltonian);
    StateVector propagate(const StateVector &psi0, double t) const;
    const Eigen::VectorXd &energies() const { return energies_; }

   private:
    ModeLayout layout_;
    Eigen::VectorXd energies_;
    CMatrix vectors_;
};

struct CollapseChannel {
    std::string name;
    OperatorMatrix op;
    double rate;
};

/// Standard channels for a layout: gamma on each present cavity mode,
/// Gamma on the motion, and gamma_e on transition 2 when requested and the
/// register has it. Zero-rate channels are omitted.
std::vector<CollapseChannel> standard_channels(const ModeLayout &layout, const PhysicalParams &params,
                                               bool include_spontaneous_emission);

enum class StepControl { adaptive, fixed };

struct Observable {
    std::string name;
    OperatorMatrix op;
};

struct EvolutionSpec {
    OperatorMatrix hamiltonian = OperatorMatrix::zero(ModeLayout());
    std::vector<CollapseChannel> collapse_ops;
    double duration = 0.0;
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    StepControl step_control = StepControl::adaptive;
    /// Number of equal steps in fixed mode.
    int fixed_steps = 1000;
    /// Evenly spaced sample times including t = 0 and t = duration.
    int samples = 2;
    std::vector<Observable> observables;
    /// Abort after this many attempted steps.
    long max_steps = 50'000'000;
};

struct MasterSample {
    double t;
    Complex trace;
    double min_eigenvalue;
    std::vector<Complex> values;  ///< one per observable, in spec order
};

struct MasterResult {
    DensityOperator final_state;
    std::vector<MasterSample> samples;
    double max_trace_drift = 0.0;
    double min_eigenvalue = 0.0;  ///< smallest over all samples
    long accepted_steps = 0;
    long rejected_steps = 0;
};

/// Integrates the master equation with an embedded Dormand-Prince pair
/// (or classic RK4 in fixed mode). rho is re-symmetrized after every step.
/// Throws std::invalid_argument on a bad spec or invalid rho0 and
/// IntegrationFailure when the step size underflows.
MasterResult evolve_master(const EvolutionSpec &spec, const DensityOperator &rho0);

/// Lindblad generator applied to rho (exposed for tests).
CMatrix lindblad_rhs(const CMatrix &hamiltonian, const std::vector<CollapseChannel> &channels, const CMatrix &rho);

}  // namespace noonforge

#endif
