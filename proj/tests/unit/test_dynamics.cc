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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "noonforge/classical.h"
#include "noonforge/displacement.h"
#include "noonforge/errors.h"
#include "noonforge/evolution.h"
#include "noonforge/hamiltonians.h"
#include "oracles.h"
#include "test_util.h"

namespace noonforge {
namespace {

using testing::max_abs;

OperatorMatrix random_hamiltonian(const ModeLayout &l, std::mt19937_64 &rng) {
    const auto d = static_cast<Eigen::Index>(l.dimension());
    CMatrix g(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        g.col(j) = testing::random_vector(l.dimension(), rng);
    }
    return OperatorMatrix(l, 0.5 * (g + g.adjoint()), Hermiticity::hermitian);
}

TEST(EvolveUnitary, IdentityDiagonalAndGroupProperty) {
    std::mt19937_64 rng(1);
    ModeLayout l = make_layout(std::vector<int>{3, 3}, 2);
    OperatorMatrix h = random_hamiltonian(l, rng);
    StateVector psi = testing::random_state(l, rng);
    EXPECT_LT(max_abs((evolve_unitary(h, psi, 0.0) - psi).amplitudes()), 1e-15);

    StateVector half = evolve_unitary(h, evolve_unitary(h, psi, 0.35), 0.35);
    StateVector full = evolve_unitary(h, psi, 0.7);
    EXPECT_LT(max_abs((half - full).amplitudes()), 1e-10);
    EXPECT_NEAR(full.norm(), 1.0, 1e-10);

    OperatorMatrix diag = number_op(l, Mode::a) * 1.3 + number_op(l, Mode::b1) * 0.4;
    StateVector out = evolve_unitary(diag, psi, 2.0);
    for (std::size_t i = 0; i < l.dimension(); ++i) {
        FockIndex f = l.multi_index(i);
        Complex phase = std::exp(Complex(0.0, -2.0 * (1.3 * f.a + 0.4 * f.b1)));
        EXPECT_LT(std::abs(out[i] - phase * psi[i]), 1e-14);
    }
    EXPECT_THROW(evolve_unitary(ladder_op(l, Mode::a), psi, 1.0), std::invalid_argument);
}

TEST(EvolveUnitary, EvolverMatchesOneShot) {
    std::mt19937_64 rng(4);
    ModeLayout l = make_layout(std::vector<int>{4}, 2);
    OperatorMatrix h = random_hamiltonian(l, rng);
    StateVector psi = testing::random_state(l, rng);
    UnitaryEvolver ev(h);
    for (double t : {0.0, 0.1, 1.0, 10.0}) {
        EXPECT_LT(max_abs((ev.propagate(psi, t) - evolve_unitary(h, psi, t)).amplitudes()), 1e-12);
    }
}

TEST(EvolveMaster, FrozenWithoutHamiltonianOrDecay) {
    std::mt19937_64 rng(2);
    ModeLayout l = make_layout(std::vector<int>{3}, 2);
    DensityOperator rho0 = testing::random_density(l, rng);
    EvolutionSpec spec;
    spec.hamiltonian = OperatorMatrix::zero(l).as_hermitian();
    spec.duration = 5.0;
    MasterResult r = evolve_master(spec, rho0);
    EXPECT_LT(max_abs(r.final_state.matrix() - rho0.matrix()), 1e-15);
}

// Under the 2 J rho J^dag convention the photon number decays at 2 gamma.
TEST(EvolveMaster, CavityDecayAtTwiceGamma) {
    ModeLayout l = make_layout({{Mode::b1, 6}}, 1);
    const double gamma = 0.3;
    EvolutionSpec spec;
    spec.hamiltonian = (number_op(l, Mode::b1) * 0.7).as_hermitian();
    spec.collapse_ops = {{"b1", ladder_op(l, Mode::b1), gamma}};
    spec.duration = 4.0;
    spec.samples = 9;
    spec.observables = {{"n", number_op(l, Mode::b1)}};
    MasterResult r = evolve_master(spec, DensityOperator::from_pure(basis_state(l, {.b1 = 3})));
    ASSERT_EQ(r.samples.size(), 9u);
    for (const MasterSample &s : r.samples) {
        EXPECT_NEAR(s.values[0].real(), 3.0 * std::exp(-2.0 * gamma * s.t), 1e-8) << "t=" << s.t;
        EXPECT_NEAR(std::abs(s.trace - 1.0), 0.0, 1e-9);
    }
    EXPECT_GE(r.min_eigenvalue, -1e-8);
}

TEST(EvolveMaster, TraceAndPositivityOnRandomProblems) {
    std::mt19937_64 rng(8);
    ModeLayout l = make_layout(std::vector<int>{3, 3}, 2);
    for (int trial = 0; trial < 3; ++trial) {
        EvolutionSpec spec;
        spec.hamiltonian = random_hamiltonian(l, rng);
        spec.collapse_ops = {{"a", ladder_op(l, Mode::a), 0.2 + 0.1 * trial},
                             {"b1", ladder_op(l, Mode::b1), 0.05},
                             {"ion", lowering_op(l, 1), 0.4}};
        spec.duration = 3.0;
        spec.samples = 13;
        MasterResult r = evolve_master(spec, DensityOperator::from_pure(testing::random_state(l, rng)));
        EXPECT_LE(r.max_trace_drift, 1e-9);
        EXPECT_GE(r.min_eigenvalue, -1e-8);
        EXPECT_EQ(r.final_state.hermiticity_error(), 0.0);
    }
}

TEST(EvolveMaster, MatchesUnitaryWithoutDecay) {
    std::mt19937_64 rng(12);
    ModeLayout l = make_layout(std::vector<int>{3, 2}, 2);
    OperatorMatrix h = random_hamiltonian(l, rng);
    StateVector psi = testing::random_state(l, rng);
    EvolutionSpec spec;
    spec.hamiltonian = h;
    spec.duration = 2.5;
    MasterResult r = evolve_master(spec, DensityOperator::from_pure(psi));
    DensityOperator expected = DensityOperator::from_pure(evolve_unitary(h, psi, 2.5));
    EXPECT_LT(max_abs(r.final_state.matrix() - expected.matrix()), 1e-7);
}

TEST(EvolveMaster, FixedStepIsBitReproducible) {
    std::mt19937_64 rng(13);
    ModeLayout l = make_layout(std::vector<int>{3}, 2);
    EvolutionSpec spec;
    spec.hamiltonian = random_hamiltonian(l, rng);
    spec.collapse_ops = {{"a", ladder_op(l, Mode::a), 0.3}};
    spec.step_control = StepControl::fixed;
    spec.fixed_steps = 400;
    spec.samples = 5;
    spec.duration = 2.0;
    DensityOperator rho0 = DensityOperator::from_pure(testing::random_state(l, rng));
    MasterResult a = evolve_master(spec, rho0);
    MasterResult b = evolve_master(spec, rho0);
    EXPECT_TRUE(a.final_state.matrix() == b.final_state.matrix());
    ASSERT_EQ(a.samples.size(), 5u);
    EXPECT_DOUBLE_EQ(a.samples[2].t, 1.0);
}

TEST(EvolveMaster, FailuresAreReported) {
    ModeLayout l = make_layout(std::vector<int>{3}, 1);
    EvolutionSpec spec;
    spec.hamiltonian = (number_op(l, Mode::a) * 1e3).as_hermitian();
    spec.duration = 10.0;
    spec.max_steps = 10;
    DensityOperator rho0 =
        DensityOperator::from_pure((basis_state(l, {}) + basis_state(l, {.a = 1})).normalized());
    EXPECT_THROW(evolve_master(spec, rho0), IntegrationFailure);

    spec.max_steps = 50'000'000;
    spec.duration = -1.0;
    EXPECT_THROW(evolve_master(spec, rho0), std::invalid_argument);
    spec.duration = 1.0;
    spec.hamiltonian = ladder_op(l, Mode::a);
    EXPECT_THROW(evolve_master(spec, rho0), std::invalid_argument);

    spec.hamiltonian = number_op(l, Mode::a);
    CMatrix bad = CMatrix::Zero(3, 3);
    bad(0, 0) = 2.0;
    bad(1, 1) = -1.0;
    EXPECT_THROW(evolve_master(spec, DensityOperator(l, bad)), InvalidState);
}

TEST(Lindblad, GeneratorIsTraceless) {
    std::mt19937_64 rng(21);
    ModeLayout l = make_layout(std::vector<int>{3, 2}, 2);
    std::vector<CollapseChannel> ch{{"a", ladder_op(l, Mode::a), 0.7}, {"s", lowering_op(l, 1), 0.2}};
    CMatrix d = lindblad_rhs(random_hamiltonian(l, rng).matrix(), ch, testing::random_density(l, rng).matrix());
    EXPECT_LT(std::abs(d.trace()), 1e-14);
    EXPECT_LT(max_abs(d - d.adjoint()), 1e-14);
}

TEST(Lindblad, StandardChannels) {
    PhysicalParams p = paper_feasibility_preset();
    p.gamma_e = 5.0;
    ModeLayout l = make_layout(std::vector<int>{3, 3, 2}, 2);
    auto without = standard_channels(l, p, false);
    auto with = standard_channels(l, p, true);
    EXPECT_EQ(with.size(), without.size() + 1);
    for (const auto &c : without) {
        EXPECT_TRUE(c.rate == p.gamma || c.rate == p.gamma_motion) << c.name;
    }
    EXPECT_EQ(with.back().rate, p.gamma_e);
}

PhysicalParams toy_classical() {
    PhysicalParams p;
    p.nu = 1.0;
    p.delta0 = 0.5;
    p.delta1 = 1.2;
    p.omega_rabi = 1.0;
    p.eta = 0.1;
    p.gamma = 0.3;
    p.gamma_motion = 0.1;
    p.pump = {0.4, 0.2};
    return p;
}

TEST(ClassicalTrajectory, DecoupledMotionIsDampedRotation) {
    PhysicalParams p = toy_classical();
    p.eta = 0.0;
    p.pump = 0.0;
    const Complex a0{0.8, -0.3};
    auto traj = classical_trajectory(p, {a0, 0.0}, 6.0, {1e-12, 1e-10, 7, 1e150});
    for (const auto &s : traj) {
        Complex exact = a0 * std::exp(-Complex(p.gamma_motion, p.nu) * s.t);
        EXPECT_LT(std::abs(s.state.alpha - exact), 1e-9) << "t=" << s.t;
    }
}

TEST(ClassicalTrajectory, FixedPointIsStationary) {
    PhysicalParams p = toy_classical();
    ClassicalState s = classical_steady_state(p);
    ClassicalState d = classical_rhs(p, s);
    const double size = std::max(std::abs(s.alpha), std::abs(s.beta));
    EXPECT_LE(std::hypot(std::abs(d.alpha), std::abs(d.beta)), 1e-10 * size);
    auto traj = classical_trajectory(p, s, 20.0, {1e-12, 1e-10, 2, 1e150});
    EXPECT_LT(std::abs(traj.back().state.beta - s.beta), 1e-9);
}

// Starting 1% off the fixed point, the cavity amplitude relaxes at gamma.
// The motion relaxes at the much slower Gamma and is not compared.
TEST(ClassicalTrajectory, PresetRelaxesToSteadyState) {
    PhysicalParams p = paper_feasibility_preset();
    ClassicalState s = classical_steady_state(p);
    auto traj = classical_trajectory(p, {s.alpha, s.beta * 1.01}, 10.0 / p.gamma, {1e-9, 1e-7, 2, 1e150});
    EXPECT_LT(std::abs(traj.back().state.beta - s.beta) / std::abs(s.beta), 1e-4);
}

TEST(ClassicalTrajectory, DivergenceIsReported) {
    PhysicalParams p = toy_classical();
    p.gamma = 0.0;
    p.gamma_motion = 0.0;
    EXPECT_THROW(classical_trajectory(p, {0.0, 1.0}, 1.0, {1e-10, 1e-8, 2, 0.5}), IntegrationFailure);
    EXPECT_THROW(classical_trajectory(p, {0.0, 1.0}, -1.0), std::invalid_argument);
}

TEST(SteadyState, ZeroPumpGivesZero) {
    PhysicalParams p = paper_feasibility_preset();
    p.pump = 0.0;
    ClassicalState s = classical_steady_state(p);
    EXPECT_EQ(s.alpha, Complex(0.0, 0.0));
    EXPECT_EQ(s.beta, Complex(0.0, 0.0));
}

TEST(SteadyState, PresetAmplitudes) {
    PhysicalParams p = paper_feasibility_preset();
    ClassicalState s = classical_steady_state(p);
    EXPECT_LE(steady_state_residual(p, s), 1e-12);
    EXPECT_NEAR(std::norm(s.beta), 1000.0, 1e-2);
    EXPECT_NEAR(s.alpha.real(), p.g0() * std::norm(s.beta) / p.nu, 1e-9);
    EXPECT_NEAR(s.alpha.real(), 1e-3, 1e-6);
    const Complex approx = p.pump / p.nu;
    EXPECT_LT(std::abs(s.beta - approx) / std::abs(approx), 10.0 * (p.gamma + p.g0() * std::abs(s.alpha)) / p.nu);
    // The default pump puts the cavity amplitude on the positive imaginary axis.
    EXPECT_LT(std::abs(std::arg(s.beta) - kPi / 2.0), 1e-5);
}

TEST(SteadyState, ToyResidualAndPumpInverse) {
    PhysicalParams p = toy_classical();
    ClassicalState s = classical_steady_state(p);
    EXPECT_LE(steady_state_residual(p, s), 1e-12);
    EXPECT_LT(std::abs(pump_for_cavity_amplitude(p, s.beta) - p.pump), 1e-12);
}

TEST(SteadyState, NonConvergenceCarriesLastIterate) {
    PhysicalParams p = toy_classical();
    SteadyStateOptions o;
    o.tolerance = 0.0;
    o.max_iterations = 3;
    try {
        classical_steady_state(p, o);
        // A bit-exact zero residual would also be acceptable.
        SUCCEED();
    } catch (const NoConvergence &e) {
        EXPECT_EQ(e.last_iterate().size(), 2u);
    }
    o.damping = 0.0;
    EXPECT_THROW(classical_steady_state(p, o), std::invalid_argument);
}

using oracles::finite_difference_jacobian;

TEST(Stability, MatrixMatchesFiniteDifferenceJacobian) {
    for (const PhysicalParams &p : {toy_classical(), paper_feasibility_preset()}) {
        ClassicalState s = classical_steady_state(p);
        Eigen::Matrix4cd m = stability_matrix(p, s);
        Eigen::Matrix4cd fd = finite_difference_jacobian(p, s);
        EXPECT_LE((m - fd).cwiseAbs().maxCoeff(), 1e-6 * m.cwiseAbs().maxCoeff());
    }
}

TEST(Stability, UncoupledEigenvalues) {
    PhysicalParams p = toy_classical();
    p.eta = 0.0;
    StabilityReport r = stability_analysis(p, classical_steady_state(p));
    std::vector<Complex> expected{{-p.gamma_motion, p.nu}, {-p.gamma_motion, -p.nu}, {-p.gamma, p.delta1},
                                  {-p.gamma, -p.delta1}};
    for (const Complex &e : expected) {
        double best = 1e300;
        for (int k = 0; k < 4; ++k) {
            best = std::min(best, std::abs(r.eigenvalues(k) - e));
        }
        EXPECT_LT(best, 1e-12);
    }
    EXPECT_TRUE(r.stable);
}

TEST(Stability, PresetIsStableAndEigenpairsConsistent) {
    PhysicalParams p = paper_feasibility_preset();
    StabilityReport r = stability_analysis(p, classical_steady_state(p));
    EXPECT_TRUE(r.stable);
    const double norm = r.matrix_m.cwiseAbs().maxCoeff();
    for (int k = 0; k < 4; ++k) {
        EXPECT_LT(r.eigenvalues(k).real(), 0.0);
        Eigen::Matrix4cd shifted = r.matrix_m - r.eigenvalues(k) * Eigen::Matrix4cd::Identity();
        Eigen::JacobiSVD<Eigen::Matrix4cd> svd(shifted);
        EXPECT_LE(svd.singularValues()(3), 1e-10 * norm);
    }
    EXPECT_THROW(stability_analysis(p, ClassicalState{0.5, 3.0}), std::invalid_argument);
}

TEST(Displacement, ZeroIsIdentity) {
    ModeLayout l = make_layout(std::vector<int>{4, 4}, 1);
    EXPECT_LT(max_abs(displacement_operator(l, 0.0, 0.0) - CMatrix::Identity(16, 16)), 1e-15);
}

TEST(Displacement, VacuumBecomesCoherentState) {
    ModeLayout l = make_layout(std::vector<int>{20, 12}, 1);
    const Complex alpha{0.6, -0.4}, beta{0.0, 0.5};
    StateVector coh(l, displacement_operator(l, alpha, beta) * basis_state(l, {}).amplitudes());
    EXPECT_LT(std::abs(ladder_op(l, Mode::a).expectation(coh) - alpha), 1e-10);
    EXPECT_LT(std::abs(ladder_op(l, Mode::b1).expectation(coh) - beta), 1e-10);
    // Poisson amplitudes <n|alpha> = exp(-|alpha|^2/2) alpha^n / sqrt(n!).
    double fact = 1.0;
    for (int n = 0; n < 8; ++n) {
        if (n > 0) {
            fact *= n;
        }
        Complex expected = std::exp(-0.5 * (std::norm(alpha) + std::norm(beta))) * std::pow(alpha, n) /
                           std::sqrt(fact);
        EXPECT_LT(std::abs(coh.amplitude({.a = n}) - expected), 1e-10);
    }
    // D^dag maps the coherent state back to the vacuum.
    Displaced<StateVector> back = displace_frame(coh, alpha, beta);
    EXPECT_NEAR(std::abs(back.value.amplitude({})), 1.0, 1e-10);
}

TEST(Displacement, UnitaryWithinGuardedAmplitudes) {
    const int cutoff = 12;
    ModeLayout l = make_layout(std::vector<int>{cutoff, cutoff}, 1);
    const double r = std::sqrt(static_cast<double>(cutoff)) / 3.0;
    CMatrix d = displacement_operator(l, std::polar(r, 0.3), std::polar(r, -1.1));
    EXPECT_LT(max_abs(d.adjoint() * d - CMatrix::Identity(d.rows(), d.cols())), 1e-10);
}

TEST(Displacement, OperatorsShiftByAmplitudes) {
    ModeLayout l = make_layout(std::vector<int>{18, 18}, 1);
    const Complex alpha{0.3, 0.2}, beta{-0.25, 0.1};
    Displaced<OperatorMatrix> a = displace_frame(ladder_op(l, Mode::a), alpha, beta);
    Displaced<OperatorMatrix> b = displace_frame(ladder_op(l, Mode::b1), alpha, beta);
    CMatrix ea = a.value.matrix() - ladder_op(l, Mode::a).matrix();
    CMatrix eb = b.value.matrix() - ladder_op(l, Mode::b1).matrix();
    // Compare on low Fock states, away from the truncation edge.
    for (int na = 0; na < 4; ++na) {
        for (int nb = 0; nb < 4; ++nb) {
            const auto i = static_cast<Eigen::Index>(l.flat_index({.a = na, .b1 = nb}));
            EXPECT_LT(std::abs(ea(i, i) - alpha), 1e-9);
            EXPECT_LT(std::abs(eb(i, i) - beta), 1e-9);
        }
    }
}

TEST(Displacement, InverseRoundTrip) {
    std::mt19937_64 rng(31);
    ModeLayout l = make_layout(std::vector<int>{18, 18}, 1);
    // A random state confined to low Fock levels.
    CVector v = CVector::Zero(static_cast<Eigen::Index>(l.dimension()));
    for (int na = 0; na < 3; ++na) {
        for (int nb = 0; nb < 3; ++nb) {
            v(static_cast<Eigen::Index>(l.flat_index({.a = na, .b1 = nb}))) = testing::random_vector(1, rng)(0);
        }
    }
    StateVector psi = StateVector(l, v).normalized();
    const Complex alpha{0.7, 0.1}, beta{0.0, -0.9};
    Displaced<StateVector> fwd = displace_frame(psi, alpha, beta);
    Displaced<StateVector> back = displace_frame(fwd.value, -alpha, -beta);
    EXPECT_LT(max_abs((back.value - psi).amplitudes()), 1e-9);
    Displaced<DensityOperator> rho = displace_frame(DensityOperator::from_pure(psi), alpha, beta);
    EXPECT_LT(max_abs(rho.value.matrix() - DensityOperator::from_pure(fwd.value).matrix()), 1e-12);
}

TEST(Displacement, LeakageWarns) {
    testing::WarningCapture capture;
    ModeLayout l = make_layout(std::vector<int>{5, 5}, 1);
    Displaced<StateVector> r = displace_frame(basis_state(l, {}), 2.0, 0.0);
    EXPECT_TRUE(r.leakage.exceeded());
    EXPECT_FALSE(capture.messages.empty());
}

}  // namespace
}  // namespace noonforge
