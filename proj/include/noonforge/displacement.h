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


// Frame displaced by mean-field amplitudes of the motion (a) and cavity 1.
//
// D(alpha, beta) = exp(alpha a^dag - alpha* a) exp(beta b1^dag - beta* b1)
// so that D^dag a D = a + alpha and D^dag b1 D = b1 + beta. Moving into the
// frame maps X -> D^dag X D for operators and density matrices and
// psi -> D^dag psi for states; displace_frame(x, -alpha, -beta) undoes it.
// In the truncated space D is exactly unitary but the shift rule only
// holds away from the cutoff.

#ifndef NOONFORGE_DISPLACEMENT_H
#define NOONFORGE_DISPLACEMENT_H

#include "noonforge/fock.h"

namespace noonforge {

template <class T>
struct Displaced {
    T value;
    /// Leakage of the displaced vacuum D|0>, i.e. how well the cutoff
    /// accommodates the frame itself.
    LeakageReport leakage;
};

/// Unitary D(alpha, beta) on the layout. Requires modes a and b1.
CMatrix displacement_operator(const ModeLayout &layout, Complex alpha, Complex beta);

/// Each overload emits a warning through noonforge::warn when the leakage
/// exceeds `threshold`.
Displaced<StateVector> displace_frame(const StateVector &state, Complex alpha, Complex beta,
                                      double threshold = kDefaultLeakageThreshold);
Displaced<DensityOperator> displace_frame(const DensityOperator &rho, Complex alpha, Complex beta,
                                          double threshold = kDefaultLeakageThreshold);
Displaced<OperatorMatrix> displace_frame(const OperatorMatrix &op, Complex alpha, Complex beta,
                                         double threshold = kDefaultLeakageThreshold);

}  // namespace noonforge

#endif
