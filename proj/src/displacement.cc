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


#include "noonforge/displacement.h"

#include <stdexcept>

#include "noonforge/errors.h"
#include "noonforge/io.h"

namespace noonforge {

namespace {

CMatrix local_displacement(int cutoff, Complex amplitude) {
    CMatrix a = CMatrix::Zero(cutoff, cutoff);
    for (int n = 1; n < cutoff; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return exp_anti_hermitian(amplitude * a.adjoint() - std::conj(amplitude) * a);
}

LeakageReport frame_leakage(const ModeLayout &layout, const CMatrix &d, double threshold) {
    StateVector vac = basis_state(layout, FockIndex{});
    StateVector shifted(layout, d * vac.amplitudes());
    LeakageReport report = truncation_leakage(shifted, threshold);
    if (report.exceeded()) {
        warn("displaced frame leaks " + format_double(report.max) + " population into the top Fock level of " +
             layout.describe());
    }
    return report;
}

}  // namespace

CMatrix displacement_operator(const ModeLayout &layout, Complex alpha, Complex beta) {
    if (!layout.has(Mode::a) || !layout.has(Mode::b1)) {
        throw std::invalid_argument("displacement needs modes a and b1, layout is " + layout.describe());
    }
    CMatrix da = embed_mode_operator(layout, Mode::a, local_displacement(layout.cutoff(Mode::a), alpha)).matrix();
    CMatrix db = embed_mode_operator(layout, Mode::b1, local_displacement(layout.cutoff(Mode::b1), beta)).matrix();
    return da * db;
}

Displaced<StateVector> displace_frame(const StateVector &state, Complex alpha, Complex beta, double threshold) {
    CMatrix d = displacement_operator(state.layout(), alpha, beta);
    StateVector out(state.layout(), d.adjoint() * state.amplitudes());
    return {std::move(out), frame_leakage(state.layout(), d, threshold)};
}

Displaced<DensityOperator> displace_frame(const DensityOperator &rho, Complex alpha, Complex beta,
                                          double threshold) {
    CMatrix d = displacement_operator(rho.layout(), alpha, beta);
    DensityOperator out(rho.layout(), d.adjoint() * rho.matrix() * d);
    return {std::move(out), frame_leakage(rho.layout(), d, threshold)};
}

Displaced<OperatorMatrix> displace_frame(const OperatorMatrix &op, Complex alpha, Complex beta, double threshold) {
    CMatrix d = displacement_operator(op.layout(), alpha, beta);
    OperatorMatrix out(op.layout(), d.adjoint() * op.matrix() * d, op.kind());
    return {std::move(out), frame_leakage(op.layout(), d, threshold)};
}

}  // namespace noonforge
