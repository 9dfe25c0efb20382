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


#include "noonforge/hamiltonians.h"

#include <cmath>
#include <stdexcept>

#include "noonforge/errors.h"

namespace noonforge {

namespace {

void require_mode(const ModeLayout &layout, Mode mode, const char *who) {
    if (!layout.has(mode)) {
        throw std::invalid_argument(std::string(who) + " needs mode " + std::string(mode_name(mode)) +
                                    ", layout is " + layout.describe());
    }
}

void require_transition(const ModeLayout &layout, int transition, const char *who) {
    try {
        layout.excited_level(transition);
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument(std::string(who) + " needs transition " + std::to_string(transition) +
                                    ", layout is " + layout.describe());
    }
}

OperatorMatrix hermitian(const ModeLayout &layout, const CMatrix &m) {
    return OperatorMatrix(layout, 0.5 * (m + m.adjoint()), Hermiticity::hermitian);
}

// s^dag b + s b^dag for the given transition and cavity mode.
CMatrix exchange(const ModeLayout &layout, int transition, Mode cavity) {
    CMatrix s = lowering_op(layout, transition).matrix();
    CMatrix b = ladder_op(layout, cavity).matrix();
    CMatrix sb = s.adjoint() * b;
    return sb + sb.adjoint();
}

CMatrix pump_term(const ModeLayout &layout, Complex pump) {
    CMatrix b = ladder_op(layout, Mode::b1).matrix();
    return -(std::conj(pump) * b + pump * b.adjoint());
}

}  // namespace

OperatorMatrix coupling_profile(const ModeLayout &layout, const PhysicalParams &params) {
    require_mode(layout, Mode::a, "coupling_profile");
    const int d = layout.cutoff(Mode::a);
    CMatrix a = CMatrix::Zero(d, d);
    for (int n = 1; n < d; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    CMatrix x = a + a.adjoint();
    const double omega = params.omega_rabi, eta = params.eta, phi = params.phi;
    if (eta == 0.0) {
        // Exact scalar limit, free of eigenvector round-off.
        CMatrix scalar = omega * std::sin(phi) * CMatrix::Identity(d, d);
        return embed_mode_operator(layout, Mode::a, scalar, Hermiticity::hermitian);
    }
    CMatrix g = hermitian_function(x, [=](double v) { return Complex(omega * std::sin(eta * v + phi), 0.0); });
    g = 0.5 * (g + g.adjoint()).eval();
    return embed_mode_operator(layout, Mode::a, g, Hermiticity::hermitian);
}

HamiltonianSplit split_full_pumped(const ModeLayout &layout, const PhysicalParams &params) {
    require_mode(layout, Mode::a, "h_full_pumped");
    require_mode(layout, Mode::b1, "h_full_pumped");
    require_transition(layout, 1, "h_full_pumped");
    CMatrix h0 = params.nu * number_op(layout, Mode::a).matrix() +
                 params.delta0 * level_projector(layout, layout.excited_level(1)).matrix() +
                 params.delta1 * number_op(layout, Mode::b1).matrix() + pump_term(layout, params.pump);
    CMatrix h1 = coupling_profile(layout, params).matrix() * exchange(layout, 1, Mode::b1);
    return {hermitian(layout, h0), hermitian(layout, h1)};
}

OperatorMatrix h_full_pumped(const ModeLayout &layout, const PhysicalParams &params) {
    HamiltonianSplit s = split_full_pumped(layout, params);
    return s.h0 + s.h1;
}

OperatorMatrix h_optomech(const ModeLayout &layout, const PhysicalParams &params, bool keep_cavity_shift) {
    require_mode(layout, Mode::a, "h_optomech");
    require_mode(layout, Mode::b1, "h_optomech");
    const double g0 = params.g0();
    double cavity = params.delta1;
    if (keep_cavity_shift) {
        double s = std::sin(params.phi);
        cavity -= params.omega_rabi * params.omega_rabi * s * s / params.delta0;
    }
    CMatrix nb = number_op(layout, Mode::b1).matrix();
    CMatrix h = params.nu * number_op(layout, Mode::a).matrix() + cavity * nb -
                g0 * position_op(layout).matrix() * nb + pump_term(layout, params.pump);
    return hermitian(layout, h);
}

OperatorMatrix h_linearized(const ModeLayout &layout, const PhysicalParams &params, const ClassicalState &steady,
                            bool keep_cubic) {
    require_mode(layout, Mode::a, "h_linearized");
    require_mode(layout, Mode::b1, "h_linearized");
    const double g0 = params.g0();
    const double delta1 = params.delta1 - g0 * 2.0 * steady.alpha.real();
    CMatrix b = ladder_op(layout, Mode::b1).matrix();
    CMatrix nb = number_op(layout, Mode::b1).matrix();
    CMatrix x = position_op(layout).matrix();
    CMatrix field = steady.beta * b.adjoint() + std::conj(steady.beta) * b;
    if (keep_cubic) {
        field += nb;
    }
    CMatrix h = params.nu * number_op(layout, Mode::a).matrix() + delta1 * nb - g0 * x * field;
    return hermitian(layout, h);
}

OperatorMatrix h_beamsplitter(const ModeLayout &layout, const PhysicalParams &params, Complex beta_bar) {
    require_mode(layout, Mode::a, "h_beamsplitter");
    require_mode(layout, Mode::b1, "h_beamsplitter");
    if (std::abs(params.delta1 - params.nu) > 1e-9 * params.nu) {
        throw InvalidParams("beam splitter requires delta1 == nu");
    }
    const double g0 = params.g0();
    CMatrix a = ladder_op(layout, Mode::a).matrix();
    CMatrix b = ladder_op(layout, Mode::b1).matrix();
    CMatrix hop = beta_bar * a * b.adjoint();
    CMatrix h = params.nu * (number_op(layout, Mode::a).matrix() + number_op(layout, Mode::b1).matrix()) -
                g0 * (hop + hop.adjoint());
    return hermitian(layout, h);
}

HamiltonianSplit split_antinode(const ModeLayout &layout, const PhysicalParams &params) {
    require_mode(layout, Mode::a, "h_antinode");
    require_mode(layout, Mode::b2, "h_antinode");
    require_transition(layout, 2, "h_antinode");
    PhysicalParams at_antinode = params;
    at_antinode.phi = kPi / 2.0;
    CMatrix h0 = params.nu * number_op(layout, Mode::a).matrix() +
                 params.delta2 * number_op(layout, Mode::b2).matrix();
    CMatrix h1 = coupling_profile(layout, at_antinode).matrix() * exchange(layout, 2, Mode::b2);
    return {hermitian(layout, h0), hermitian(layout, h1)};
}

OperatorMatrix h_antinode(const ModeLayout &layout, const PhysicalParams &params) {
    HamiltonianSplit s = split_antinode(layout, params);
    return s.h0 + s.h1;
}

OperatorMatrix h_cross_kerr(const ModeLayout &layout, const PhysicalParams &params) {
    require_mode(layout, Mode::a, "h_cross_kerr");
    require_mode(layout, Mode::b2, "h_cross_kerr");
    const double g_ck = params.g_ck();
    const auto dim = static_cast<Eigen::Index>(layout.dimension());
    CMatrix h = CMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        FockIndex idx = layout.multi_index(static_cast<std::size_t>(i));
        double na = idx.a, nb = idx.b2;
        h(i, i) = params.nu * na + params.delta2 * nb - g_ck * na * nb;
    }
    return OperatorMatrix(layout, std::move(h), Hermiticity::hermitian);
}

OperatorMatrix h_jc_resonant(const ModeLayout &layout, const PhysicalParams &params) {
    require_mode(layout, Mode::b2, "h_jc_resonant");
    require_transition(layout, 2, "h_jc_resonant");
    return hermitian(layout, params.omega_rabi * exchange(layout, 2, Mode::b2));
}

OperatorMatrix h_rabi_drive(const ModeLayout &layout, Complex rabi) {
    require_transition(layout, 2, "h_rabi_drive");
    CMatrix s = lowering_op(layout, 2).matrix();
    return hermitian(layout, rabi * s.adjoint() + std::conj(rabi) * s);
}

}  // namespace noonforge
