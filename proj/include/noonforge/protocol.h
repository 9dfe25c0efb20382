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


// N00N-state generation between cavity mode 1 and the ion motion.
//
// Pipeline on |N>_1 |0>_a (|0>_2 + |1>_2)/sqrt(2) |g>:
//
//   B(pi/4), C(pi), B(pi/4), J, R, then measure the ion.
//
// Gate conventions (all exactly unitary in the truncated space):
//
//   B(l)  = exp[l (a^dag b1 - a b1^dag)]          mixing angle l
//   C(t)  = exp(i t a^dag a b2^dag b2)
//   J     = exp[-i pi (b2^dag s2 + b2 s2^dag) / 2]
//   R     = exp[pi (s2^dag - s2) / 4]
//   P(t)  = exp(i t a^dag a)
//
// With these, B(l) |N>_1 |0>_a = sum_k sqrt(C(N,k)) sin^k(l) cos^(N-k)(l)
// |N-k>_1 |k>_a, and the outcome g (e) leaves
// (|0>_1 |N>_a + i |N>_1 |0>_a)/sqrt(2) (with -i for e) and b2 in vacuum.

#ifndef NOONFORGE_PROTOCOL_H
#define NOONFORGE_PROTOCOL_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noonforge/fock.h"
#include "noonforge/params.h"

namespace noonforge {

OperatorMatrix gate_beamsplitter(const ModeLayout &layout, double lambda);
OperatorMatrix gate_controlled_phase(const ModeLayout &layout, double theta);
OperatorMatrix gate_swap_J(const ModeLayout &layout);
OperatorMatrix gate_R(const ModeLayout &layout);
OperatorMatrix phase_P(const ModeLayout &layout, double theta);

enum class GateId { B, C, J, R, P };

std::string gate_name(GateId id);

struct Gate {
    GateId id;
    double parameter = 0.0;  ///< lambda for B, theta for C and P, unused otherwise
};

struct GateSequence {
    ModeLayout layout;
    std::vector<Gate> gates;

    /// Throws std::invalid_argument if a gate's modes are missing or a
    /// parameter is not finite.
    void validate() const;
    OperatorMatrix unitary(const Gate &gate) const;
    StateVector apply(const StateVector &state) const;

    /// B(pi/4), C(pi), B(pi/4), J, R.
    static GateSequence noon(const ModeLayout &layout);
};

/// Cutoff N+2 on a and b1, 2 on b2, two ion levels.
ModeLayout protocol_layout(int n);

/// |N>_1 |0>_a (|0>_2 + |1>_2)/sqrt(2) |g>.
StateVector noon_input(const ModeLayout &layout, int n);

/// (|0>_1 |N>_a + sign * i |N>_1 |0>_a)/sqrt(2) |0>_2 |level>, where the
/// outcome g pairs with sign +1 and e with sign -1.
StateVector noon_target(const ModeLayout &layout, int n, int level);

struct Measurement {
    int outcome;  ///< ion level
    double probability;
    StateVector post_state;  ///< normalized
};

/// Deterministic projection onto one ion level. Throws InvalidState if the
/// branch has zero norm.
Measurement project_ion(const StateVector &state, int level);

/// Both branches, including zero-probability ones (post_state left zero).
std::vector<Measurement> ion_branches(const StateVector &state);

/// Born-rule sample of the ion level. Reproducible for a given seed.
Measurement measure_ion(const StateVector &state, std::uint64_t seed);

struct ProtocolBranch {
    Measurement measurement;
    StateVector target;
    double fidelity;  ///< |<target|post_state>|
};

struct ProtocolResult {
    int n;
    StateVector pre_measurement;
    std::vector<ProtocolBranch> branches;  ///< indexed by ion level
    int outcome;                           ///< sampled level, or g when deterministic
    std::optional<std::uint64_t> seed;

    const ProtocolBranch &selected() const { return branches.at(static_cast<std::size_t>(outcome)); }
};

/// Gate-level pipeline. Without a seed the g branch is reported as the
/// outcome; both branches are always available. Throws
/// std::invalid_argument if the layout cannot hold N quanta.
ProtocolResult run_noon_ideal(int n, const ModeLayout &layout, std::optional<std::uint64_t> seed = std::nullopt);
ProtocolResult run_noon_ideal(int n, std::optional<std::uint64_t> seed = std::nullopt);

/// Durations of the five stages in seconds.
struct StageSchedule {
    double beamsplitter_1 = 0.0;
    double controlled_phase = 0.0;
    double beamsplitter_2 = 0.0;
    double swap = 0.0;
    double rotation = 0.0;

    double total() const { return beamsplitter_1 + controlled_phase + beamsplitter_2 + swap + rotation; }
};

struct PhysicalOptions {
    /// Mean cavity amplitude driving the beam splitter. Defaults to the
    /// mean-field steady state of the parameters.
    std::optional<Complex> beta_bar;
    /// Magnitude of the microwave Rabi frequency used for R.
    double rabi = kTwoPi * 100e3;
    /// Evolve a density matrix with cavity, motional (and optionally
    /// spontaneous-emission) damping in every stage.
    bool lindblad = false;
    bool spontaneous_emission = false;
    /// Use the bilinear Hamiltonian with counter-rotating terms for B
    /// instead of the rotating-wave beam splitter. Unitary runs only.
    bool counter_rotating_beamsplitter = false;
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
};

/// Stage durations that realize B(pi/4), C(pi), J and R exactly:
/// (pi/4)/(g0 |beta|), pi/|g_ck|, (pi/4)/(g0 |beta|), pi/(2 Omega), pi/(4 rabi).
StageSchedule exact_schedule(const PhysicalParams &params, const PhysicalOptions &options);

struct PhysicalBranch {
    int outcome;
    double probability;
    DensityOperator post_state;
    StateVector target;
    double fidelity;  ///< Uhlmann root fidelity to the target
};

struct PhysicalProtocolResult {
    int n;
    StageSchedule schedule;
    Complex beta_bar;
    DensityOperator pre_measurement;
    double fidelity_to_ideal;  ///< root fidelity to run_noon_ideal's output
    double min_eigenvalue;     ///< smallest eigenvalue seen in Lindblad stages
    double max_trace_drift;
    std::vector<PhysicalBranch> branches;
};

/// Each gate replaced by evolution under its physical Hamiltonian in the
/// frame rotating with the free mode frequencies: the rotating-wave beam
/// splitter, the cross-Kerr model, resonant Jaynes-Cummings exchange and a
/// microwave drive of phase pi/2. Throws std::invalid_argument on negative
/// durations and IntegrationFailure from the master-equation solver.
PhysicalProtocolResult run_noon_physical(int n, const PhysicalParams &params, const StageSchedule &schedule,
                                         const PhysicalOptions &options = {});

}  // namespace noonforge

#endif
