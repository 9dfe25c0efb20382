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


// Hamiltonians of the ion + cavity system in the truncated Fock space.
// hbar = 1; every constructor returns an operator on the caller's layout
// and throws std::invalid_argument when a required mode or transition is
// missing.

#ifndef NOONFORGE_HAMILTONIANS_H
#define NOONFORGE_HAMILTONIANS_H

#include "noonforge/classical.h"
#include "noonforge/fock.h"
#include "noonforge/params.h"

namespace noonforge {

/// Omega * sin(eta x + phi) with x = a + a^dagger, evaluated on the
/// spectrum of x. phi = pi/2 gives Omega * cos(eta x).
OperatorMatrix coupling_profile(const ModeLayout &layout, const PhysicalParams &params);

/// Pumped ion-cavity Hamiltonian on modes a, b1 and transition 1:
///   nu a^dag a + delta0 s1^dag s1 + delta1 b1^dag b1 - (E* b1 + E b1^dag)
///   + g(x) (s1^dag b1 + s1 b1^dag)
OperatorMatrix h_full_pumped(const ModeLayout &layout, const PhysicalParams &params);

struct HamiltonianSplit {
    OperatorMatrix h0;  ///< free part
    OperatorMatrix h1;  ///< ion-cavity exchange
};

/// h_full_pumped = h0 + h1 with h1 = g(x) (s1^dag b1 + s1 b1^dag).
HamiltonianSplit split_full_pumped(const ModeLayout &layout, const PhysicalParams &params);

/// Optomechanical Hamiltonian after eliminating transition 1:
///   nu a^dag a + [delta1 - g0 (a + a^dag)] b1^dag b1 - (E* b1 + E b1^dag)
/// With keep_cavity_shift, adds the dispersive shift
/// -Omega^2 sin^2(phi) / delta0 to the cavity frequency.
OperatorMatrix h_optomech(const ModeLayout &layout, const PhysicalParams &params, bool keep_cavity_shift = false);

/// Optomechanical Hamiltonian in the frame displaced by the mean field:
///   nu a^dag a + delta1' b1^dag b1 - g0 (a + a^dag)(beta b1^dag + beta* b1)
/// with delta1' = delta1 - g0 (alpha + alpha*). keep_cubic retains
/// -g0 (a + a^dag) b1^dag b1.
OperatorMatrix h_linearized(const ModeLayout &layout, const PhysicalParams &params, const ClassicalState &steady,
                            bool keep_cubic = false);

/// Rotating-wave beam splitter, valid at delta1 = nu:
///   nu (a^dag a + b1^dag b1) - g0 (beta a b1^dag + beta* a^dag b1)
/// Throws InvalidParams unless |delta1 - nu| <= 1e-9 nu.
OperatorMatrix h_beamsplitter(const ModeLayout &layout, const PhysicalParams &params, Complex beta_bar);

/// Ion at the anti-node of cavity 2, transition 2:
///   nu a^dag a + delta2 b2^dag b2 + Omega cos(eta x)(s2^dag b2 + s2 b2^dag)
OperatorMatrix h_antinode(const ModeLayout &layout, const PhysicalParams &params);

/// h_antinode = h0 + h1 with h1 = Omega cos(eta x)(s2^dag b2 + s2 b2^dag).
HamiltonianSplit split_antinode(const ModeLayout &layout, const PhysicalParams &params);

/// nu a^dag a + delta2 b2^dag b2 - g_ck a^dag a b2^dag b2. Diagonal.
OperatorMatrix h_cross_kerr(const ModeLayout &layout, const PhysicalParams &params);

/// Resonant Jaynes-Cummings exchange Omega (s2^dag b2 + s2 b2^dag).
OperatorMatrix h_jc_resonant(const ModeLayout &layout, const PhysicalParams &params);

/// Coherent drive of transition 2: rabi s2^dag + rabi* s2.
OperatorMatrix h_rabi_drive(const ModeLayout &layout, Complex rabi);

}  // namespace noonforge

#endif
