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

#include "noonforge/errors.h"
#include "noonforge/fock.h"
#include "test_util.h"

namespace noonforge {
namespace {

using testing::max_abs;
using testing::random_density;
using testing::random_state;

TEST(Layout, DimensionIsProductOfFactors) {
    EXPECT_EQ(make_layout(std::vector<int>{3}, 1).dimension(), 3u);
    for (int n = 0; n <= 5; ++n) {
        EXPECT_EQ(make_layout(std::vector<int>{n + 1, n + 1, 2}, 2).dimension(),
                  static_cast<std::size_t>(4 * (n + 1) * (n + 1)));
    }
    EXPECT_EQ(make_layout(std::vector<int>{2, 2}, 3).dimension(), 12u);
    EXPECT_EQ(ModeLayout().dimension(), 1u);
}

TEST(Layout, RejectsNonPositiveDimensions) {
    EXPECT_THROW(make_layout(std::vector<int>{0}, 1), std::invalid_argument);
    EXPECT_THROW(make_layout(std::vector<int>{2, -1}, 1), std::invalid_argument);
    EXPECT_THROW(make_layout(std::vector<int>{2}, 0), std::invalid_argument);
}

TEST(Layout, FlatIndexIsLittleEndianInCanonicalOrder) {
    ModeLayout l = make_layout(std::vector<int>{3, 4, 2}, 2);
    EXPECT_EQ(l.flat_index({.a = 1}), 1u);
    EXPECT_EQ(l.flat_index({.b1 = 1}), 3u);
    EXPECT_EQ(l.flat_index({.b2 = 1}), 12u);
    EXPECT_EQ(l.flat_index({.level = 1}), 24u);
    for (std::size_t i = 0; i < l.dimension(); ++i) {
        EXPECT_EQ(l.flat_index(l.multi_index(i)), i);
    }
}

TEST(Layout, MissingModesAndLevels) {
    ModeLayout l = make_layout({{Mode::a, 3}, {Mode::b2, 2}}, 2);
    EXPECT_TRUE(l.has(Mode::a));
    EXPECT_FALSE(l.has(Mode::b1));
    EXPECT_THROW(ladder_op(l, Mode::b1), std::invalid_argument);
    EXPECT_THROW(lowering_op(l, 3), std::invalid_argument);
    EXPECT_THROW(lowering_op(make_layout(std::vector<int>{2}, 1), 1), std::invalid_argument);
}

TEST(Ladder, MatrixElements) {
    ModeLayout l = make_layout(std::vector<int>{3}, 1);
    CMatrix a = ladder_op(l, Mode::a).matrix();
    EXPECT_DOUBLE_EQ(a(0, 1).real(), 1.0);
    EXPECT_DOUBLE_EQ(a(1, 2).real(), std::sqrt(2.0));
    EXPECT_EQ(ladder_op(l, Mode::a).apply(basis_state(l, {})).norm(), 0.0);
    CMatrix n = number_op(l, Mode::a).matrix();
    for (int k = 0; k < 3; ++k) {
        EXPECT_DOUBLE_EQ(n(k, k).real(), k);
    }
    EXPECT_EQ(number_op(l, Mode::a).kind(), Hermiticity::hermitian);
}

// [a, a^dagger] is the identity except on the top Fock level of that mode.
TEST(Ladder, CommutatorDeviationConfinedToTopLevel) {
    ModeLayout l = make_layout(std::vector<int>{4, 3, 2}, 2);
    for (Mode m : kAllModes) {
        OperatorMatrix a = ladder_op(l, m);
        CMatrix c = commutator(a, a.adjoint()).matrix();
        for (std::size_t i = 0; i < l.dimension(); ++i) {
            const auto ii = static_cast<Eigen::Index>(i);
            const bool top = l.multi_index(i)[m] == l.cutoff(m) - 1;
            EXPECT_NEAR(c(ii, ii).real(), top ? 1.0 - l.cutoff(m) : 1.0, 1e-12);
        }
        CMatrix off = c;
        off.diagonal().setZero();
        EXPECT_EQ(max_abs(off), 0.0);
    }
}

TEST(Ladder, ModesCommute) {
    ModeLayout l = make_layout(std::vector<int>{3, 3, 2}, 3);
    std::vector<OperatorMatrix> ops{ladder_op(l, Mode::a), ladder_op(l, Mode::b1), ladder_op(l, Mode::b2),
                                    lowering_op(l, 1), lowering_op(l, 2)};
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            if (i >= 3 && j >= 3) {
                continue;  // two ion operators act on the same factor
            }
            EXPECT_EQ(max_abs(commutator(ops[i], ops[j]).matrix()), 0.0);
            EXPECT_EQ(max_abs(commutator(ops[i], ops[j].adjoint()).matrix()), 0.0);
        }
    }
}

TEST(Lowering, TwoLevel) {
    ModeLayout l = make_layout(std::vector<int>{}, 2);
    OperatorMatrix s = lowering_op(l, 1);
    StateVector g = basis_state(l, {.level = kGround});
    StateVector e = basis_state(l, {.level = kExcited});
    EXPECT_NEAR(std::abs(overlap(g, s.apply(e))), 1.0, 1e-15);
    EXPECT_EQ(s.apply(g).norm(), 0.0);
    EXPECT_EQ(max_abs((s * s).matrix()), 0.0);
    // With two levels both transitions share the excited state.
    EXPECT_EQ(max_abs(lowering_op(l, 2).matrix() - s.matrix()), 0.0);
}

TEST(Lowering, ThreeLevelProjectorsAreOrthogonal) {
    ModeLayout l = make_layout(std::vector<int>{2}, 3);
    OperatorMatrix p1 = lowering_op(l, 1).adjoint() * lowering_op(l, 1);
    OperatorMatrix p2 = lowering_op(l, 2).adjoint() * lowering_op(l, 2);
    EXPECT_EQ(max_abs((p1 * p2).matrix()), 0.0);
    EXPECT_EQ(max_abs((p1 * p1 - p1).matrix()), 0.0);
    EXPECT_EQ(max_abs(p1.matrix() - level_projector(l, kExcited1).matrix()), 0.0);
    EXPECT_EQ(max_abs(p2.matrix() - level_projector(l, kExcited2).matrix()), 0.0);
}

TEST(BasisState, NormAndRange) {
    ModeLayout l = make_layout(std::vector<int>{2, 2}, 2);
    StateVector s = basis_state(l, {.b1 = 1});
    EXPECT_DOUBLE_EQ(s.norm(), 1.0);
    EXPECT_EQ(s[l.flat_index({.b1 = 1})], Complex(1.0, 0.0));
    StateVector sup = (basis_state(l, {}) + basis_state(l, {.b1 = 1})).normalized();
    EXPECT_NEAR(sup.norm(), 1.0, 1e-15);
    EXPECT_THROW(basis_state(l, {.a = 2}), std::out_of_range);
    EXPECT_THROW(basis_state(l, {.level = 2}), std::out_of_range);
    EXPECT_THROW(StateVector(l).normalized(), InvalidState);
}

TEST(BasisState, Orthonormal) {
    ModeLayout l = make_layout(std::vector<int>{3, 2, 2}, 2);
    for (std::size_t i = 0; i < l.dimension(); ++i) {
        for (std::size_t j = 0; j < l.dimension(); ++j) {
            Complex o = overlap(basis_state(l, l.multi_index(i)), basis_state(l, l.multi_index(j)));
            EXPECT_EQ(o, Complex(i == j ? 1.0 : 0.0, 0.0));
        }
    }
}

TEST(Overlap, ConjugateSymmetryAndCauchySchwarz) {
    std::mt19937_64 rng(11);
    ModeLayout l = make_layout(std::vector<int>{3, 3}, 2);
    for (int trial = 0; trial < 50; ++trial) {
        StateVector x = random_state(l, rng) * Complex(0.3 + trial * 0.1, 0.0);
        StateVector y = random_state(l, rng);
        EXPECT_NEAR(std::abs(overlap(x, y) - std::conj(overlap(y, x))), 0.0, 1e-14);
        EXPECT_LE(std::abs(overlap(x, y)), x.norm() * y.norm() * (1.0 + 1e-14));
    }
    EXPECT_THROW(overlap(basis_state(l, {}), basis_state(make_layout(std::vector<int>{3}, 1), {})),
                 std::invalid_argument);
}

TEST(Overlap, NoonBranchesAreOrthogonal) {
    for (int n = 1; n <= 5; ++n) {
        ModeLayout l = make_layout(std::vector<int>{n + 1, n + 1}, 1);
        StateVector plus = (basis_state(l, {.b1 = n}) + kI * basis_state(l, {.a = n})).normalized();
        StateVector minus = (basis_state(l, {.b1 = n}) - kI * basis_state(l, {.a = n})).normalized();
        EXPECT_NEAR(std::abs(overlap(plus, minus)), 0.0, 1e-15);
        EXPECT_NEAR(overlap(plus, plus).real(), 1.0, 1e-15);
    }
}

TEST(Fidelity, PureAndMixedPathsAgree) {
    std::mt19937_64 rng(5);
    ModeLayout l = make_layout(std::vector<int>{3, 2}, 2);
    EXPECT_DOUBLE_EQ(state_fidelity(basis_state(l, {}), basis_state(l, {})), 1.0);
    EXPECT_DOUBLE_EQ(state_fidelity(basis_state(l, {}), basis_state(l, {.a = 1})), 0.0);
    for (int trial = 0; trial < 20; ++trial) {
        StateVector x = random_state(l, rng);
        StateVector y = random_state(l, rng);
        const double pure = state_fidelity(x, y);
        const DensityOperator rx = DensityOperator::from_pure(x);
        const DensityOperator ry = DensityOperator::from_pure(y);
        EXPECT_NEAR(state_fidelity(rx, ry), pure, 1e-10);
        EXPECT_NEAR(state_fidelity(ry, rx), pure, 1e-10);
        EXPECT_NEAR(state_fidelity(rx, y), pure, 1e-10);
    }
}

TEST(Fidelity, MixedIsSymmetricAndBounded) {
    std::mt19937_64 rng(9);
    ModeLayout l = make_layout(std::vector<int>{2, 2}, 2);
    for (int trial = 0; trial < 10; ++trial) {
        DensityOperator r = random_density(l, rng);
        DensityOperator s = random_density(l, rng);
        const double f = state_fidelity(r, s);
        EXPECT_NEAR(f, state_fidelity(s, r), 1e-10);
        EXPECT_GE(f, 0.0);
        EXPECT_LE(f, 1.0 + 1e-12);
        EXPECT_NEAR(state_fidelity(r, r), 1.0, 1e-10);
    }
}

TEST(Fidelity, RejectsNonPhysicalDensity) {
    ModeLayout l = make_layout(std::vector<int>{2}, 1);
    CMatrix bad = CMatrix::Zero(2, 2);
    bad(0, 0) = 1.5;
    bad(1, 1) = -0.5;
    DensityOperator rho(l, bad);
    EXPECT_THROW(state_fidelity(rho, DensityOperator::from_pure(basis_state(l, {}))), InvalidState);
}

TEST(PartialTrace, ProductStateFactorizes) {
    ModeLayout l = make_layout(std::vector<int>{3, 2}, 2);
    ModeLayout la = make_layout(std::vector<int>{3}, 1);
    StateVector sa = (basis_state(la, {}) + 2.0 * basis_state(la, {.a = 2})).normalized();
    // |sa> (x) |1>_b1 (x) (|g> + |e>)/sqrt2
    CVector v = CVector::Zero(static_cast<Eigen::Index>(l.dimension()));
    for (int k = 0; k < 3; ++k) {
        for (int lev = 0; lev < 2; ++lev) {
            v(static_cast<Eigen::Index>(l.flat_index({.a = k, .b1 = 1, .level = lev}))) = sa[static_cast<std::size_t>(k)] /
                                                                                          std::sqrt(2.0);
        }
    }
    DensityOperator rho = DensityOperator::from_pure(StateVector(l, v));
    DensityOperator ra = partial_trace(rho, {Factor::a});
    EXPECT_LT(max_abs(ra.matrix() - DensityOperator::from_pure(sa).matrix()), 1e-15);
    DensityOperator rion = partial_trace(rho, {Factor::ion});
    EXPECT_LT(max_abs(rion.matrix() - CMatrix::Constant(2, 2, 0.5)), 1e-15);
    EXPECT_THROW(partial_trace(rho, {}), std::invalid_argument);
}

TEST(PartialTrace, TracingIonLeavesNoonDensity) {
    const int n = 3;
    ModeLayout l = make_layout(std::vector<int>{n + 1, n + 1}, 2);
    StateVector noon = (basis_state(l, {.b1 = n}) + kI * basis_state(l, {.a = n})).normalized();
    DensityOperator reduced = partial_trace(DensityOperator::from_pure(noon), {Factor::a, Factor::b1});
    ModeLayout lm = make_layout(std::vector<int>{n + 1, n + 1}, 1);
    StateVector expected = (basis_state(lm, {.b1 = n}) + kI * basis_state(lm, {.a = n})).normalized();
    EXPECT_LT(max_abs(reduced.matrix() - DensityOperator::from_pure(expected).matrix()), 1e-15);
}

TEST(PartialTrace, PreservesTraceAndPositivity) {
    std::mt19937_64 rng(3);
    ModeLayout l = make_layout(std::vector<int>{3, 2, 2}, 2);
    const std::vector<std::vector<Factor>> keeps{
        {Factor::a}, {Factor::b1, Factor::ion}, {Factor::a, Factor::b2}, {Factor::ion}};
    for (int trial = 0; trial < 10; ++trial) {
        DensityOperator rho = random_density(l, rng);
        for (const auto &keep : keeps) {
            DensityOperator r = partial_trace(rho, keep);
            EXPECT_NEAR(std::abs(r.trace() - rho.trace()), 0.0, 1e-12);
            EXPECT_GE(r.min_eigenvalue(), -1e-10);
        }
    }
}

TEST(MatrixFunctions, PropagatorIsUnitaryAndComposes) {
    std::mt19937_64 rng(17);
    const int d = 12;
    CMatrix g(d, d);
    for (int j = 0; j < d; ++j) {
        g.col(j) = testing::random_vector(d, rng);
    }
    CMatrix h = 0.5 * (g + g.adjoint());
    CMatrix u1 = unitary_propagator(h, 0.3);
    CMatrix u2 = unitary_propagator(h, 0.5);
    EXPECT_LT(max_abs(u1.adjoint() * u1 - CMatrix::Identity(d, d)), 1e-12);
    EXPECT_LT(max_abs(u2 * u1 - unitary_propagator(h, 0.8)), 1e-12);
    CMatrix u = exp_anti_hermitian(-kI * 0.3 * h);
    EXPECT_LT(max_abs(u - u1), 1e-12);
}

TEST(Hermiticity, FlagsAndChecks) {
    ModeLayout l = make_layout(std::vector<int>{3}, 1);
    OperatorMatrix a = ladder_op(l, Mode::a);
    EXPECT_GT(a.hermiticity_error(), 0.5);
    EXPECT_THROW(a.as_hermitian(), std::invalid_argument);
    OperatorMatrix x = position_op(l);
    EXPECT_EQ(x.kind(), Hermiticity::hermitian);
    EXPECT_EQ(x.hermiticity_error(), 0.0);
}

TEST(Leakage, ReportsTopLevelPopulation) {
    ModeLayout l = make_layout(std::vector<int>{3, 2}, 1);
    StateVector s = (basis_state(l, {}) + 0.1 * basis_state(l, {.a = 2})).normalized();
    LeakageReport r = truncation_leakage(s);
    EXPECT_NEAR(r.per_mode[0], 0.01 / 1.01, 1e-15);
    EXPECT_EQ(r.per_mode[1], 0.0);
    EXPECT_TRUE(r.exceeded());
    EXPECT_FALSE(truncation_leakage(basis_state(l, {})).exceeded());
}

TEST(PhaseFix, FirstAmplitudeBecomesPositiveReal) {
    ModeLayout l = make_layout(std::vector<int>{3}, 1);
    StateVector s = (basis_state(l, {.a = 1}) * Complex(0.0, -1.0) + basis_state(l, {.a = 2})).normalized();
    StateVector f = phase_fixed(s);
    EXPECT_NEAR(f[1].imag(), 0.0, 1e-16);
    EXPECT_GT(f[1].real(), 0.0);
    EXPECT_NEAR(std::abs(overlap(f, s)), 1.0, 1e-15);
}

}  // namespace
}  // namespace noonforge
