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


#ifndef NOONFORGE_PARAMS_H
#define NOONFORGE_PARAMS_H

#include <complex>
#include <string>
#include <string_view>

namespace noonforge {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Physical parameters of the ion + two-cavity setup.
///
/// Units: hbar = 1, every frequency and rate is an angular frequency in
/// rad/s. Damping rates enter the dissipator 2 J rho J^dagger - {J^dagger J, rho}
/// with the rate as a plain prefactor, so the energy of a damped mode decays
/// at twice the quoted rate.
struct PhysicalParams {
    double nu = 0.0;          ///< trap frequency
    double delta0 = 0.0;      ///< detuning of transition 1 from cavity 1
    double delta1 = 0.0;      ///< detuning of cavity 1 from the pump
    double delta2 = 0.0;      ///< detuning of transition 2 from cavity 2
    double omega_rabi = 0.0;  ///< vacuum Rabi coupling
    double eta = 0.0;         ///< Lamb-Dicke parameter
    double phi = 0.0;         ///< standing-wave phase at the trap centre
    std::complex<double> pump{0.0, 0.0};
    double gamma = 0.0;         ///< cavity field decay
    double gamma_motion = 0.0;  ///< motional decay
    double gamma_e = 0.0;       ///< spontaneous emission of transition 2

    /// Optomechanical coupling eta * Omega^2 / delta0 at the slope point
    /// phi = pi/4. Throws InvalidParams when delta0 == 0.
    double g0() const;
    /// Cross-Kerr coupling 2 eta^2 Omega^2 / delta2. Throws InvalidParams
    /// when delta2 == 0.
    double g_ck() const;

    /// Throws InvalidParams on non-finite values, nu <= 0, eta < 0 or a
    /// negative rate.
    void validate() const;

    friend bool operator==(const PhysicalParams &, const PhysicalParams &) = default;
};

/// Values used in the feasibility estimate for Rydberg ions in microwave
/// cavities: gamma = 2pi*10 Hz, Omega = 2pi*50 kHz, delta2 = 10 Omega,
/// nu = 10 delta2, delta0 = 10 nu, delta1 = nu, eta = 0.1, phi = pi/4.
/// The pump is chosen for roughly 1000 intracavity photons; the motional
/// decay is set to 2pi*1 Hz and spontaneous emission is off.
PhysicalParams paper_feasibility_preset();

/// Looks up a preset by name. Throws std::invalid_argument if unknown.
PhysicalParams preset_by_name(std::string_view name);

/// Parses "2pi*<number>" (any case, optional spaces around '*') or a plain
/// number. Throws std::invalid_argument on malformed text.
double parse_angular_frequency(std::string_view text);

}  // namespace noonforge

#endif
