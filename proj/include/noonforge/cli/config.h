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


// Run configuration for the command-line tool: one JSON document per run.
//
// Parsing is strict: unknown keys and wrong types are errors that name the
// offending key path. Angular frequencies may be numbers or "2pi*<Hz>"
// strings; complex values are [re, im] pairs or plain numbers.

#ifndef NOONFORGE_CLI_CONFIG_H
#define NOONFORGE_CLI_CONFIG_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "noonforge/fock.h"
#include "noonforge/params.h"

namespace noonforge::cli {

/// Thrown for malformed or inconsistent configuration.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct LayoutConfig {
    std::vector<ModeCutoff> cutoffs;
    int ion_levels = 1;
    ModeLayout build() const { return make_layout(cutoffs, ion_levels); }
};

/// Hamiltonian selection shared by the hamiltonian and evolve commands.
struct HamiltonianConfig {
    std::string model = "optomech";  ///< full_pumped, optomech, linearized, beamsplitter,
                                     ///< antinode, cross_kerr, jc, rabi
    bool keep_cavity_shift = false;
    bool keep_cubic = false;
    std::optional<Complex> beta_bar;  ///< defaults to the mean-field steady state
    std::optional<Complex> alpha_bar;
    Complex rabi{0.0, 0.0};
    int eigenvalues = 10;
    bool dump_matrix = true;
};

struct EvolveConfig {
    HamiltonianConfig hamiltonian;
    FockIndex initial;
    double duration = 0.0;
    int samples = 11;
    bool lindblad = false;
    bool spontaneous_emission = false;
    std::string step_control = "adaptive";
    int fixed_steps = 1000;
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    std::vector<std::string> observables{"n_a", "n_b1", "n_b2", "p_g"};
};

struct SteadyConfig {
    double damping = 0.5;
    int max_iterations = 100000;
};

struct ProtocolConfig {
    int n = 1;
    std::string mode = "ideal";  ///< ideal or physical
    bool sample = false;         ///< Born-rule outcome from the seed
    bool lindblad = false;
    bool spontaneous_emission = false;
    bool counter_rotating_beamsplitter = false;
    std::optional<double> rabi;
    double time_scale = 1.0;  ///< multiplies every exact stage duration
};

struct SweepConfig {
    int n_min = 1;
    int n_max = 40;
    std::vector<double> percents{1.0, 2.0, 3.0, 5.0, 15.0, 50.0};
    long samples = 10000;
};

struct EliminationConfig {
    std::vector<double> ratios{5.0, 10.0, 20.0, 40.0};
    double nu_over_delta2 = 10.0;
    int cutoff_a = 6;
    int cutoff_b2 = 3;
    int samples = 64;
    double omega_reference = 0.0;  ///< 0 = use params.omega_rabi
    /// Window of the projector run, in units of 2 pi / |delta2|.
    double projector_periods = 20.0;
};

struct RunConfig {
    std::optional<std::string> preset;
    PhysicalParams params;
    bool has_params = false;
    std::optional<LayoutConfig> layout;
    std::uint64_t seed = 0;
    std::optional<HamiltonianConfig> hamiltonian;
    std::optional<EvolveConfig> evolve;
    std::optional<SteadyConfig> steady;
    std::optional<ProtocolConfig> protocol;
    std::optional<SweepConfig> fidelity_sweep;
    std::optional<EliminationConfig> verify_elimination;

    /// Canonical JSON text of the effective configuration (sorted keys),
    /// used for the provenance hash.
    std::string canonical;
};

/// Parses a configuration document. `preset_override` and `seed_override`
/// come from the command line and win over the file. Throws ConfigError.
RunConfig parse_config(const std::string &text, const std::optional<std::string> &preset_override = std::nullopt,
                       const std::optional<std::uint64_t> &seed_override = std::nullopt);

/// Reads and parses a file. Throws ConfigError if it cannot be read.
RunConfig load_config(const std::string &path, const std::optional<std::string> &preset_override = std::nullopt,
                      const std::optional<std::uint64_t> &seed_override = std::nullopt);

/// FNV-1a 64-bit hash as 16 hex digits.
std::string fnv1a_hex(const std::string &text);

}  // namespace noonforge::cli

#endif
