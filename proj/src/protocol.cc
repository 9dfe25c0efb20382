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


#include "noonforge/protocol.h"

#include <cmath>
#include <stdexcept>

#include "noonforge/classical.h"
#include "noonforge/errors.h"
#include "noonforge/evolution.h"
#include "noonforge/hamiltonians.h"
#include "noonforge/random.h"

namespace noonforge {

namespace {

void require(const ModeLayout &layout, Mode mode, const char *who) {
    if (!layout.has(mode)) {
        throw std::invalid_argument(std::string(who) + " needs mode " + std::string(mode_name(mode)) +
                                    ", layout is " + layout.describe());
    }
}

void require_finite(double x, const char *who) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument(std::string(who) + " parameter must be finite");
    }
}

OperatorMatrix diagonal_phase(const ModeLayout &layout, const std::function<double(const FockIndex &)> &phase) {
    const auto d = static_cast<Eigen::Index>(layout.dimension());
    CMatrix u = CMatrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        u(i, i) = std::exp(kI * phase(layout.multi_index(static_cast<std::size_t>(i))));
    }
    return OperatorMatrix(layout, std::move(u));
}

}  // namespace

OperatorMatrix gate_beamsplitter(const ModeLayout &layout, double lambda) {
    require(layout, Mode::a, "gate_beamsplitter");
    require(layout, Mode::b1, "gate_beamsplitter");
    require_finite(lambda, "gate_beamsplitter");
    CMatrix hop = ladder_op(layout, Mode::a).matrix().adjoint() * ladder_op(layout, Mode::b1).matrix();
    return OperatorMatrix(layout, exp_anti_hermitian(lambda * (hop - hop.adjoint())));
}

OperatorMatrix gate_controlled_phase(const ModeLayout &layout, double theta) {
    require(layout, Mode::a, "gate_controlled_phase");
    require(layout, Mode::b2, "gate_controlled_phase");
    require_finite(theta, "gate_controlled_phase");
    return diagonal_phase(layout, [theta](const FockIndex &i) { return theta * i.a * i.b2; });
}

OperatorMatrix gate_swap_J(const ModeLayout &layout) {
    require(layout, Mode::b2, "gate_swap_J");
    CMatrix s = lowering_op(layout, 2).matrix();
    CMatrix b = ladder_op(layout, Mode::b2).matrix();
    CMatrix x = b.adjoint() * s;
    return OperatorMatrix(layout, exp_anti_hermitian(-kI * (kPi / 2.0) * (x + x.adjoint())));
}

OperatorMatrix gate_R(const ModeLayout &layout) {
    CMatrix s = lowering_op(layout, 2).matrix();
    return OperatorMatrix(layout, exp_anti_hermitian((kPi / 4.0) * (s.adjoint() - s)));
}

OperatorMatrix phase_P(const ModeLayout &layout, double theta) {
    require(layout, Mode::a, "phase_P");
    require_finite(theta, "phase_P");
    return diagonal_phase(layout, [theta](const FockIndex &i) { return theta * i.a; });
}

std::string gate_name(GateId id) {
    switch (id) {
        case GateId::B:
            return "B";
        case GateId::C:
            return "C";
        case GateId::J:
            return "J";
        case GateId::R:
            return "R";
        case GateId::P:
            return "P";
    }
    return "?";
}

void GateSequence::validate() const {
    for (const Gate &g : gates) {
        unitary(g);
    }
}

OperatorMatrix GateSequence::unitary(const Gate &gate) const {
    switch (gate.id) {
        case GateId::B:
            return gate_beamsplitter(layout, gate.parameter);
        case GateId::C:
            return gate_controlled_phase(layout, gate.parameter);
        case GateId::J:
            return gate_swap_J(layout);
        case GateId::R:
            return gate_R(layout);
        case GateId::P:
            return phase_P(layout, gate.parameter);
    }
    throw std::invalid_argument("unknown gate");
}

StateVector GateSequence::apply(const StateVector &state) const {
    StateVector out = state;
    for (const Gate &g : gates) {
        out = unitary(g).apply(out);
    }
    return out;
}

GateSequence GateSequence::noon(const ModeLayout &layout) {
    return {layout,
            {{GateId::B, kPi / 4.0}, {GateId::C, kPi}, {GateId::B, kPi / 4.0}, {GateId::J, 0.0}, {GateId::R, 0.0}}};
}

ModeLayout protocol_layout(int n) {
    if (n < 0) {
        throw std::invalid_argument("N must be >= 0");
    }
    return make_layout({n + 2, n + 2, 2}, 2);
}

namespace {

void check_protocol_layout(const ModeLayout &layout, int n) {
    if (n < 0) {
        throw std::invalid_argument("N must be >= 0");
    }
    for (Mode m : {Mode::a, Mode::b1, Mode::b2}) {
        require(layout, m, "N00N protocol");
    }
    if (layout.cutoff(Mode::a) < n + 1 || layout.cutoff(Mode::b1) < n + 1) {
        throw std::invalid_argument("cutoffs on a and b1 must be at least N+1 = " + std::to_string(n + 1) +
                                    ", layout is " + layout.describe());
    }
    if (layout.cutoff(Mode::b2) < 2) {
        throw std::invalid_argument("cutoff on b2 must be at least 2");
    }
    if (layout.ion_levels() < 2) {
        throw std::invalid_argument("N00N protocol needs at least two ion levels");
    }
}

}  // namespace

StateVector noon_input(const ModeLayout &layout, int n) {
    check_protocol_layout(layout, n);
    StateVector s = basis_state(layout, {.a = 0, .b1 = n, .b2 = 0}) + basis_state(layout, {.a = 0, .b1 = n, .b2 = 1});
    return s * Complex(1.0 / std::sqrt(2.0));
}

StateVector noon_target(const ModeLayout &layout, int n, int level) {
    check_protocol_layout(layout, n);
    const int e = layout.excited_level(2);
    if (level != kGround && level != e) {
        throw std::invalid_argument("N00N targets exist for the g and e2 outcomes only");
    }
    const double sign = level == kGround ? 1.0 : -1.0;
    StateVector s = basis_state(layout, {.a = n, .b1 = 0, .level = level}) +
                    basis_state(layout, {.a = 0, .b1 = n, .level = level}) * Complex(0.0, sign);
    if (n == 0) {
        // Both terms coincide; the normalized state is the vacuum.
        return s.normalized();
    }
    return s * Complex(1.0 / std::sqrt(2.0));
}

Measurement project_ion(const StateVector &state, int level) {
    const ModeLayout &layout = state.layout();
    if (layout.ion_levels() < 2) {
        throw std::invalid_argument("measurement needs an ion register with at least two levels");
    }
    if (level < 0 || level >= layout.ion_levels()) {
        throw std::out_of_range("ion level outside register");
    }
    CVector v = state.amplitudes();
    const std::size_t stride = layout.ion_stride();
    for (std::size_t i = 0; i < layout.dimension(); ++i) {
        if (static_cast<int>(i / stride) != level) {
            v[static_cast<Eigen::Index>(i)] = 0.0;
        }
    }
    double p = v.squaredNorm() / state.amplitudes().squaredNorm();
    if (p == 0.0) {
        throw InvalidState("ion level " + std::to_string(level) + " has zero probability");
    }
    return {level, p, StateVector(layout, v).normalized()};
}

std::vector<Measurement> ion_branches(const StateVector &state) {
    std::vector<Measurement> out;
    for (int level = 0; level < state.layout().ion_levels(); ++level) {
        try {
            out.push_back(project_ion(state, level));
        } catch (const InvalidState &) {
            out.push_back({level, 0.0, StateVector(state.layout())});
        }
    }
    return out;
}

Measurement measure_ion(const StateVector &state, std::uint64_t seed) {
    std::vector<Measurement> branches = ion_branches(state);
    double u = RandomStream(seed).uniform();
    double acc = 0.0;
    for (const Measurement &m : branches) {
        acc += m.probability;
        if (u < acc && m.probability > 0.0) {
            return m;
        }
    }
    for (auto it = branches.rbegin(); it != branches.rend(); ++it) {
        if (it->probability > 0.0) {
            return *it;
        }
    }
    throw InvalidState("state has zero norm");
}

ProtocolResult run_noon_ideal(int n, const ModeLayout &layout, std::optional<std::uint64_t> seed) {
    StateVector pre = GateSequence::noon(layout).apply(noon_input(layout, n));
    ProtocolResult result{n, pre, {}, kGround, seed};
    for (Measurement &m : ion_branches(pre)) {
        if (m.outcome > layout.excited_level(2)) {
            continue;
        }
        StateVector target = noon_target(layout, n, m.outcome);
        double f = m.probability > 0.0 ? state_fidelity(target, m.post_state) : 0.0;
        result.branches.push_back({std::move(m), std::move(target), f});
    }
    if (seed) {
        result.outcome = measure_ion(pre, *seed).outcome;
    }
    return result;
}

ProtocolResult run_noon_ideal(int n, std::optional<std::uint64_t> seed) {
    return run_noon_ideal(n, protocol_layout(n), seed);
}

// ---------------------------------------------------------------------------
// Physical pipeline

namespace {

Complex resolve_beta(const PhysicalParams &params, const PhysicalOptions &options) {
    if (options.beta_bar) {
        return *options.beta_bar;
    }
    return classical_steady_state(params).beta;
}

struct Stage {
    std::string name;
    CMatrix hamiltonian;  // rotating frame
    double duration;
    // Unitary for pure-state runs; empty to use exp(-i H t).
    std::optional<CMatrix> unitary;
};

}  // namespace

StageSchedule exact_schedule(const PhysicalParams &params, const PhysicalOptions &options) {
    Complex beta = resolve_beta(params, options);
    const double rate = params.g0() * std::abs(beta);
    if (rate == 0.0 || params.omega_rabi == 0.0 || !(options.rabi > 0.0)) {
        throw InvalidParams("exact schedule needs nonzero g0 |beta|, Omega and Rabi frequency");
    }
    StageSchedule s;
    s.beamsplitter_1 = (kPi / 4.0) / rate;
    s.controlled_phase = kPi / std::abs(params.g_ck());
    s.beamsplitter_2 = s.beamsplitter_1;
    s.swap = kPi / (2.0 * params.omega_rabi);
    s.rotation = kPi / (4.0 * options.rabi);
    return s;
}

PhysicalProtocolResult run_noon_physical(int n, const PhysicalParams &params, const StageSchedule &schedule,
                                         const PhysicalOptions &options) {
    params.validate();
    for (double t : {schedule.beamsplitter_1, schedule.controlled_phase, schedule.beamsplitter_2, schedule.swap,
                     schedule.rotation}) {
        if (!(t >= 0.0) || !std::isfinite(t)) {
            throw std::invalid_argument("stage durations must be finite and >= 0");
        }
    }
    if (options.lindblad && options.counter_rotating_beamsplitter) {
        throw std::invalid_argument("counter-rotating beam splitter is only available for unitary runs");
    }
    const ModeLayout layout = protocol_layout(n);
    const Complex beta = resolve_beta(params, options);

    // Beam splitter: -g0 (beta a b1^dag + h.c.) after removing nu (n_a + n_b1).
    OperatorMatrix bs_rot = h_beamsplitter(layout, [&] {
        PhysicalParams p = params;
        p.delta1 = p.nu;
        return p;
    }(), beta);
    CMatrix free_ab = params.nu * (number_op(layout, Mode::a).matrix() + number_op(layout, Mode::b1).matrix());
    CMatrix h_bs = bs_rot.matrix() - free_ab;
    // Cross-Kerr: -g_ck n_a n_b2 after removing nu n_a + delta2 n_b2.
    CMatrix h_ck = h_cross_kerr(layout, params).matrix() -
                   (params.nu * number_op(layout, Mode::a).matrix() +
                    params.delta2 * number_op(layout, Mode::b2).matrix());
    CMatrix h_j = h_jc_resonant(layout, params).matrix();
    CMatrix h_r = h_rabi_drive(layout, Complex(0.0, options.rabi)).matrix();

    auto bs_stage = [&](const std::string &name, double t) {
        Stage s{name, h_bs, t, std::nullopt};
        if (options.counter_rotating_beamsplitter) {
            PhysicalParams p = params;
            p.delta1 = p.nu;
            CMatrix lab = h_linearized(layout, p, ClassicalState{0.0, beta}).matrix();
            CMatrix back = unitary_propagator(free_ab, -t);
            s.unitary = back * unitary_propagator(lab, t);
        }
        return s;
    };
    std::vector<Stage> stages{bs_stage("B1", schedule.beamsplitter_1),
                              {"C", h_ck, schedule.controlled_phase, std::nullopt},
                              bs_stage("B2", schedule.beamsplitter_2),
                              {"J", h_j, schedule.swap, std::nullopt},
                              {"R", h_r, schedule.rotation, std::nullopt}};

    const StateVector input = noon_input(layout, n);
    const ProtocolResult ideal = run_noon_ideal(n, layout);

    PhysicalProtocolResult result{n, schedule, beta, DensityOperator::from_pure(input), 0.0, 0.0, 0.0, {}};
    result.min_eigenvalue = result.pre_measurement.min_eigenvalue();

    if (!options.lindblad) {
        StateVector psi = input;
        for (const Stage &s : stages) {
            CMatrix u = s.unitary ? *s.unitary : unitary_propagator(s.hamiltonian, s.duration);
            psi = StateVector(layout, u * psi.amplitudes());
        }
        result.pre_measurement = DensityOperator::from_pure(psi);
    } else {
        std::vector<CollapseChannel> channels = standard_channels(layout, params, options.spontaneous_emission);
        DensityOperator rho = result.pre_measurement;
        for (const Stage &s : stages) {
            EvolutionSpec spec;
            spec.hamiltonian = OperatorMatrix(layout, s.hamiltonian, Hermiticity::hermitian);
            spec.collapse_ops = channels;
            spec.duration = s.duration;
            spec.abs_tol = options.abs_tol;
            spec.rel_tol = options.rel_tol;
            MasterResult r = evolve_master(spec, rho);
            result.min_eigenvalue = std::min(result.min_eigenvalue, r.min_eigenvalue);
            result.max_trace_drift = std::max(result.max_trace_drift, r.max_trace_drift);
            rho = r.final_state;
        }
        result.pre_measurement = rho;
    }
    result.fidelity_to_ideal = state_fidelity(result.pre_measurement, ideal.pre_measurement);

    const CMatrix &rho = result.pre_measurement.matrix();
    const double trace = rho.trace().real();
    for (int level : {kGround, layout.excited_level(2)}) {
        CMatrix proj = level_projector(layout, level).matrix();
        CMatrix branch = proj * rho * proj;
        double p = branch.trace().real() / trace;
        StateVector target = noon_target(layout, n, level);
        if (p <= 0.0) {
            result.branches.push_back(
                {level, 0.0, DensityOperator(layout, CMatrix::Zero(rho.rows(), rho.cols())), target, 0.0});
            continue;
        }
        DensityOperator post(layout, branch / branch.trace().real());
        double f = state_fidelity(post, target);
        result.branches.push_back({level, p, std::move(post), std::move(target), f});
    }
    return result;
}

}  // namespace noonforge
