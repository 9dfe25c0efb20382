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

// Truncated Fock-space algebra for the ion-motion / two-cavity system.
//
// A ModeLayout is the tensor product of up to three bosonic modes and an
// internal ion register, always in the canonical order (a, b1, b2, ion):
//
//   a   ion motion (phonons)
//   b1  cavity mode 1 (beam-splitter cavity)
//   b2  cavity mode 2 (cross-Kerr / swap cavity)
//   ion internal levels {g}, {g, e} or {g, e1, e2}
//
// Flat indices are little-endian over that order, i.e. mode a varies
// fastest:
//
//   flat = n_a + d_a * (n_b1 + d_b1 * (n_b2 + d_b2 * level))
//
// where absent modes contribute a factor of 1. CSV dumps rely on this
// ordering being fixed.

#ifndef NOONFORGE_FOCK_H
#define NOONFORGE_FOCK_H

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace noonforge {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

enum class Mode : int { a = 0, b1 = 1, b2 = 2 };
inline constexpr std::array<Mode, 3> kAllModes{Mode::a, Mode::b1, Mode::b2};

/// A tensor factor: one of the bosonic modes or the ion register.
enum class Factor : int { a = 0, b1 = 1, b2 = 2, ion = 3 };

std::string_view mode_name(Mode mode);
std::string_view factor_name(Factor factor);

/// Ion level indices. With two levels, `kExcited` is the single excited
/// state and stands in for whichever transition is being driven.
inline constexpr int kGround = 0;
inline constexpr int kExcited = 1;
inline constexpr int kExcited1 = 1;
inline constexpr int kExcited2 = 2;

/// Occupation numbers of one product basis vector. Absent modes stay 0.
struct FockIndex {
    int a = 0;
    int b1 = 0;
    int b2 = 0;
    int level = kGround;

    int &operator[](Mode mode);
    int operator[](Mode mode) const;
    friend bool operator==(const FockIndex &, const FockIndex &) = default;
};

struct ModeCutoff {
    Mode mode;
    int cutoff;
};

class ModeLayout {
   public:
    /// Empty layout: no modes, ion traced out, dimension 1.
    ModeLayout() = default;

    bool has(Mode mode) const { return cutoffs_[static_cast<int>(mode)] > 0; }
    /// Throws std::invalid_argument when the mode is absent.
    int cutoff(Mode mode) const;
    int ion_levels() const { return ion_levels_; }
    std::size_t dimension() const;

    std::size_t stride(Mode mode) const;
    std::size_t ion_stride() const;

    std::size_t flat_index(const FockIndex &index) const;
    FockIndex multi_index(std::size_t flat) const;

    /// Level index reached by transition 1 or 2 from the ground state.
    /// Throws std::invalid_argument if the register cannot represent it.
    int excited_level(int transition) const;

    std::vector<Mode> modes() const;
    std::string describe() const;

    friend bool operator==(const ModeLayout &, const ModeLayout &) = default;

   private:
    friend ModeLayout make_layout(const std::vector<ModeCutoff> &cutoffs, int ion_levels);
    std::array<int, 3> cutoffs_{0, 0, 0};  // 0 = absent
    int ion_levels_ = 1;
};

/// Positional form: cutoffs are assigned to a, b1, b2 in that order.
ModeLayout make_layout(const std::vector<int> &cutoffs, int ion_levels);
ModeLayout make_layout(const std::vector<ModeCutoff> &cutoffs, int ion_levels);

enum class Hermiticity { hermitian, anti_hermitian, general };

class StateVector {
   public:
    explicit StateVector(ModeLayout layout);
    StateVector(ModeLayout layout, CVector amplitudes);

    const ModeLayout &layout() const { return layout_; }
    const CVector &amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }
    Complex amplitude(const FockIndex &index) const;

    double norm() const { return amplitudes_.norm(); }
    /// Throws InvalidState for a zero vector.
    StateVector normalized() const;

    StateVector operator+(const StateVector &other) const;
    StateVector operator-(const StateVector &other) const;
    StateVector operator*(Complex factor) const;
    friend StateVector operator*(Complex factor, const StateVector &state) { return state * factor; }

   private:
    ModeLayout layout_;
    CVector amplitudes_;
};

class DensityOperator {
   public:
    DensityOperator(ModeLayout layout, CMatrix matrix);
    static DensityOperator from_pure(const StateVector &state);

    const ModeLayout &layout() const { return layout_; }
    const CMatrix &matrix() const { return matrix_; }

    Complex trace() const { return matrix_.trace(); }
    double min_eigenvalue() const;
    double hermiticity_error() const;

    /// Throws InvalidState if the matrix is not Hermitian, not unit trace,
    /// or has an eigenvalue below -tolerance.
    void validate(double tolerance = 1e-8) const;

   private:
    ModeLayout layout_;
    CMatrix matrix_;
};

class OperatorMatrix {
   public:
    OperatorMatrix(ModeLayout layout, CMatrix matrix, Hermiticity kind = Hermiticity::general);

    static OperatorMatrix identity(const ModeLayout &layout);
    static OperatorMatrix zero(const ModeLayout &layout);

    const ModeLayout &layout() const { return layout_; }
    const CMatrix &matrix() const { return matrix_; }
    Hermiticity kind() const { return kind_; }
    std::size_t dimension() const { return static_cast<std::size_t>(matrix_.rows()); }

    OperatorMatrix adjoint() const;
    /// ||A - A^dagger||_inf / ||A||_inf (0 for the zero operator).
    double hermiticity_error() const;
    /// Overrides the flag after an explicit check; throws if the check fails.
    OperatorMatrix as_hermitian(double tolerance = 1e-12) const;

    StateVector apply(const StateVector &state) const;
    Complex expectation(const StateVector &state) const;
    Complex expectation(const DensityOperator &rho) const;

    OperatorMatrix operator+(const OperatorMatrix &other) const;
    OperatorMatrix operator-(const OperatorMatrix &other) const;
    OperatorMatrix operator*(const OperatorMatrix &other) const;
    OperatorMatrix operator*(Complex factor) const;
    OperatorMatrix operator*(double factor) const;
    OperatorMatrix operator-() const { return *this * -1.0; }
    friend OperatorMatrix operator*(Complex factor, const OperatorMatrix &op) { return op * factor; }
    friend OperatorMatrix operator*(double factor, const OperatorMatrix &op) { return op * factor; }

   private:
    ModeLayout layout_;
    CMatrix matrix_;
    Hermiticity kind_;
};

OperatorMatrix commutator(const OperatorMatrix &x, const OperatorMatrix &y);

/// Infinity (max row sum) norm.
double inf_norm(const CMatrix &m);

/// Truncated annihilation operator of `mode`, embedded in the full space.
OperatorMatrix ladder_op(const ModeLayout &layout, Mode mode);
OperatorMatrix number_op(const ModeLayout &layout, Mode mode);
/// x = a + a^dagger of the motional mode.
OperatorMatrix position_op(const ModeLayout &layout);
/// |g><e_j| for transition j in {1, 2}.
OperatorMatrix lowering_op(const ModeLayout &layout, int transition);
/// |level><level| of the ion register.
OperatorMatrix level_projector(const ModeLayout &layout, int level);

/// Embeds a single-mode operator (cutoff x cutoff) into the full space.
OperatorMatrix embed_mode_operator(const ModeLayout &layout, Mode mode, const CMatrix &local,
                                   Hermiticity kind = Hermiticity::general);

/// Applies f to the spectrum of a Hermitian operator: V f(D) V^dagger.
CMatrix hermitian_function(const CMatrix &hermitian, const std::function<Complex(double)> &f);
/// exp(-i H t) for Hermitian H.
CMatrix unitary_propagator(const CMatrix &hermitian, double t);
/// exp(G) for anti-Hermitian G, exactly unitary in the truncated space.
CMatrix exp_anti_hermitian(const CMatrix &generator);

StateVector basis_state(const ModeLayout &layout, const FockIndex &index);

/// <x|y>, conjugate-linear in x.
Complex overlap(const StateVector &x, const StateVector &y);

/// |<x|y>| for pure states. Inputs are not renormalized.
double state_fidelity(const StateVector &x, const StateVector &y);
/// Root (Uhlmann) fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)).
double state_fidelity(const DensityOperator &rho, const DensityOperator &sigma);
double state_fidelity(const DensityOperator &rho, const StateVector &psi);

/// Reduced state on the kept factors. Throws on an empty keep set.
DensityOperator partial_trace(const DensityOperator &rho, const std::vector<Factor> &keep);

/// Population sitting in the top Fock level of each mode.
struct LeakageReport {
    std::array<double, 3> per_mode{0.0, 0.0, 0.0};
    double max = 0.0;
    double threshold = 1e-8;
    bool exceeded() const { return max > threshold; }
};

inline constexpr double kDefaultLeakageThreshold = 1e-8;

LeakageReport truncation_leakage(const StateVector &state, double threshold = kDefaultLeakageThreshold);
LeakageReport truncation_leakage(const DensityOperator &rho, double threshold = kDefaultLeakageThreshold);

/// Global phase chosen so that the first amplitude with modulus above
/// `cutoff` is real and positive.
StateVector phase_fixed(const StateVector &state, double cutoff = 1e-12);

}  // namespace noonforge

#endif
