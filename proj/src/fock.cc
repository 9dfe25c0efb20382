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

#include "noonforge/fock.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "noonforge/errors.h"

namespace noonforge {

std::string_view mode_name(Mode mode) {
    switch (mode) {
        case Mode::a:
            return "a";
        case Mode::b1:
            return "b1";
        case Mode::b2:
            return "b2";
    }
    return "?";
}

std::string_view factor_name(Factor factor) {
    if (factor == Factor::ion) {
        return "ion";
    }
    return mode_name(static_cast<Mode>(static_cast<int>(factor)));
}

int &FockIndex::operator[](Mode mode) {
    switch (mode) {
        case Mode::a:
            return a;
        case Mode::b1:
            return b1;
        case Mode::b2:
            return b2;
    }
    throw std::invalid_argument("unknown mode");
}

int FockIndex::operator[](Mode mode) const { return const_cast<FockIndex &>(*this)[mode]; }

int ModeLayout::cutoff(Mode mode) const {
    if (!has(mode)) {
        throw std::invalid_argument("mode " + std::string(mode_name(mode)) + " is not part of layout " + describe());
    }
    return cutoffs_[static_cast<int>(mode)];
}

std::size_t ModeLayout::dimension() const {
    std::size_t d = static_cast<std::size_t>(ion_levels_);
    for (int c : cutoffs_) {
        if (c > 0) {
            d *= static_cast<std::size_t>(c);
        }
    }
    return d;
}

std::size_t ModeLayout::stride(Mode mode) const {
    std::size_t s = 1;
    for (int m = 0; m < static_cast<int>(mode); ++m) {
        if (cutoffs_[m] > 0) {
            s *= static_cast<std::size_t>(cutoffs_[m]);
        }
    }
    return s;
}

std::size_t ModeLayout::ion_stride() const { return dimension() / static_cast<std::size_t>(ion_levels_); }

std::size_t ModeLayout::flat_index(const FockIndex &index) const {
    std::size_t flat = 0;
    for (Mode mode : kAllModes) {
        int n = index[mode];
        if (!has(mode)) {
            if (n != 0) {
                throw std::out_of_range("occupation given for absent mode " + std::string(mode_name(mode)));
            }
            continue;
        }
        if (n < 0 || n >= cutoff(mode)) {
            throw std::out_of_range("occupation " + std::to_string(n) + " of mode " + std::string(mode_name(mode)) +
                                    " outside cutoff " + std::to_string(cutoff(mode)));
        }
        flat += static_cast<std::size_t>(n) * stride(mode);
    }
    if (index.level < 0 || index.level >= ion_levels_) {
        throw std::out_of_range("ion level " + std::to_string(index.level) + " outside register of " +
                                std::to_string(ion_levels_) + " levels");
    }
    return flat + static_cast<std::size_t>(index.level) * ion_stride();
}

FockIndex ModeLayout::multi_index(std::size_t flat) const {
    if (flat >= dimension()) {
        throw std::out_of_range("flat index outside layout");
    }
    FockIndex index;
    for (Mode mode : kAllModes) {
        if (has(mode)) {
            auto d = static_cast<std::size_t>(cutoff(mode));
            index[mode] = static_cast<int>(flat % d);
            flat /= d;
        }
    }
    index.level = static_cast<int>(flat);
    return index;
}

int ModeLayout::excited_level(int transition) const {
    if (transition != 1 && transition != 2) {
        throw std::invalid_argument("transition must be 1 or 2");
    }
    if (ion_levels_ == 2) {
        return kExcited;
    }
    if (ion_levels_ == 3) {
        return transition;
    }
    throw std::invalid_argument("ion register with " + std::to_string(ion_levels_) + " level(s) has no transition " +
                                std::to_string(transition));
}

std::vector<Mode> ModeLayout::modes() const {
    std::vector<Mode> out;
    for (Mode mode : kAllModes) {
        if (has(mode)) {
            out.push_back(mode);
        }
    }
    return out;
}

std::string ModeLayout::describe() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (Mode mode : modes()) {
        os << (first ? "" : ", ") << mode_name(mode) << ":" << cutoff(mode);
        first = false;
    }
    os << (first ? "" : ", ") << "ion:" << ion_levels_ << "]";
    return os.str();
}

ModeLayout make_layout(const std::vector<int> &cutoffs, int ion_levels) {
    if (cutoffs.size() > kAllModes.size()) {
        throw std::invalid_argument("at most three bosonic modes (a, b1, b2)");
    }
    std::vector<ModeCutoff> named;
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        named.push_back({kAllModes[i], cutoffs[i]});
    }
    return make_layout(named, ion_levels);
}

ModeLayout make_layout(const std::vector<ModeCutoff> &cutoffs, int ion_levels) {
    if (ion_levels < 1 || ion_levels > 3) {
        throw std::invalid_argument("ion_levels must be 1, 2 or 3");
    }
    ModeLayout layout;
    for (const auto &[mode, cutoff] : cutoffs) {
        if (cutoff < 1) {
            throw std::invalid_argument("cutoff of mode " + std::string(mode_name(mode)) + " must be >= 1");
        }
        if (layout.has(mode)) {
            throw std::invalid_argument("mode " + std::string(mode_name(mode)) + " listed twice");
        }
        layout.cutoffs_[static_cast<int>(mode)] = cutoff;
    }
    layout.ion_levels_ = ion_levels;
    return layout;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(ModeLayout layout)
    : layout_(layout), amplitudes_(CVector::Zero(static_cast<Eigen::Index>(layout.dimension()))) {}

StateVector::StateVector(ModeLayout layout, CVector amplitudes) : layout_(layout), amplitudes_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amplitudes_.size()) != layout_.dimension()) {
        throw std::invalid_argument("amplitude vector length does not match layout dimension");
    }
}

Complex StateVector::amplitude(const FockIndex &index) const {
    return amplitudes_[static_cast<Eigen::Index>(layout_.flat_index(index))];
}

StateVector StateVector::normalized() const {
    double n = norm();
    if (n == 0.0) {
        throw InvalidState("cannot normalize the zero vector");
    }
    return StateVector(layout_, amplitudes_ / n);
}

StateVector StateVector::operator+(const StateVector &other) const {
    if (!(layout_ == other.layout_)) {
        throw std::invalid_argument("layout mismatch in state sum");
    }
    return StateVector(layout_, amplitudes_ + other.amplitudes_);
}

StateVector StateVector::operator-(const StateVector &other) const { return *this + other * Complex(-1.0); }

StateVector StateVector::operator*(Complex factor) const { return StateVector(layout_, amplitudes_ * factor); }

// ---------------------------------------------------------------------------
// DensityOperator

DensityOperator::DensityOperator(ModeLayout layout, CMatrix matrix) : layout_(layout), matrix_(std::move(matrix)) {
    auto d = static_cast<Eigen::Index>(layout_.dimension());
    if (matrix_.rows() != d || matrix_.cols() != d) {
        throw std::invalid_argument("density matrix shape does not match layout dimension");
    }
}

DensityOperator DensityOperator::from_pure(const StateVector &state) {
    const CVector &v = state.amplitudes();
    return DensityOperator(state.layout(), v * v.adjoint());
}

double DensityOperator::min_eigenvalue() const {
    CMatrix h = 0.5 * (matrix_ + matrix_.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double DensityOperator::hermiticity_error() const { return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff(); }

void DensityOperator::validate(double tolerance) const {
    if (hermiticity_error() > tolerance) {
        throw InvalidState("density operator is not Hermitian");
    }
    if (std::abs(trace() - 1.0) > tolerance) {
        throw InvalidState("density operator trace differs from 1");
    }
    if (min_eigenvalue() < -tolerance) {
        throw InvalidState("density operator has a negative eigenvalue");
    }
}

// ---------------------------------------------------------------------------
// OperatorMatrix

double inf_norm(const CMatrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

OperatorMatrix::OperatorMatrix(ModeLayout layout, CMatrix matrix, Hermiticity kind)
    : layout_(layout), matrix_(std::move(matrix)), kind_(kind) {
    auto d = static_cast<Eigen::Index>(layout_.dimension());
    if (matrix_.rows() != d || matrix_.cols() != d) {
        throw std::invalid_argument("operator shape does not match layout dimension");
    }
}

OperatorMatrix OperatorMatrix::identity(const ModeLayout &layout) {
    auto d = static_cast<Eigen::Index>(layout.dimension());
    return OperatorMatrix(layout, CMatrix::Identity(d, d), Hermiticity::hermitian);
}

OperatorMatrix OperatorMatrix::zero(const ModeLayout &layout) {
    auto d = static_cast<Eigen::Index>(layout.dimension());
    return OperatorMatrix(layout, CMatrix::Zero(d, d), Hermiticity::hermitian);
}

OperatorMatrix OperatorMatrix::adjoint() const { return OperatorMatrix(layout_, matrix_.adjoint(), kind_); }

double OperatorMatrix::hermiticity_error() const {
    double scale = inf_norm(matrix_);
    if (scale == 0.0) {
        return 0.0;
    }
    return inf_norm(matrix_ - matrix_.adjoint()) / scale;
}

OperatorMatrix OperatorMatrix::as_hermitian(double tolerance) const {
    if (hermiticity_error() > tolerance) {
        throw std::invalid_argument("operator is not Hermitian within tolerance");
    }
    return OperatorMatrix(layout_, matrix_, Hermiticity::hermitian);
}

StateVector OperatorMatrix::apply(const StateVector &state) const {
    if (!(layout_ == state.layout())) {
        throw std::invalid_argument("layout mismatch between operator and state");
    }
    return StateVector(layout_, matrix_ * state.amplitudes());
}

Complex OperatorMatrix::expectation(const StateVector &state) const {
    return overlap(state, apply(state));
}

Complex OperatorMatrix::expectation(const DensityOperator &rho) const {
    if (!(layout_ == rho.layout())) {
        throw std::invalid_argument("layout mismatch between operator and density operator");
    }
    return (matrix_ * rho.matrix()).trace();
}

namespace {

Hermiticity sum_kind(Hermiticity x, Hermiticity y) { return x == y ? x : Hermiticity::general; }

void require_same_layout(const ModeLayout &x, const ModeLayout &y) {
    if (!(x == y)) {
        throw std::invalid_argument("layout mismatch: " + x.describe() + " vs " + y.describe());
    }
}

}  // namespace

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix &other) const {
    require_same_layout(layout_, other.layout_);
    return OperatorMatrix(layout_, matrix_ + other.matrix_, sum_kind(kind_, other.kind_));
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix &other) const {
    require_same_layout(layout_, other.layout_);
    return OperatorMatrix(layout_, matrix_ - other.matrix_, sum_kind(kind_, other.kind_));
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix &other) const {
    require_same_layout(layout_, other.layout_);
    return OperatorMatrix(layout_, matrix_ * other.matrix_, Hermiticity::general);
}

OperatorMatrix OperatorMatrix::operator*(double factor) const {
    return OperatorMatrix(layout_, matrix_ * factor, kind_);
}

OperatorMatrix OperatorMatrix::operator*(Complex factor) const {
    Hermiticity kind = Hermiticity::general;
    if (factor.imag() == 0.0) {
        kind = kind_;
    } else if (factor.real() == 0.0 && kind_ != Hermiticity::general) {
        kind = kind_ == Hermiticity::hermitian ? Hermiticity::anti_hermitian : Hermiticity::hermitian;
    }
    return OperatorMatrix(layout_, matrix_ * factor, kind);
}

OperatorMatrix commutator(const OperatorMatrix &x, const OperatorMatrix &y) {
    require_same_layout(x.layout(), y.layout());
    return OperatorMatrix(x.layout(), x.matrix() * y.matrix() - y.matrix() * x.matrix());
}

// ---------------------------------------------------------------------------
// Constructors

OperatorMatrix embed_mode_operator(const ModeLayout &layout, Mode mode, const CMatrix &local, Hermiticity kind) {
    const int d = layout.cutoff(mode);
    if (local.rows() != d || local.cols() != d) {
        throw std::invalid_argument("local operator does not match mode cutoff");
    }
    const std::size_t s = layout.stride(mode);
    const auto dim = static_cast<Eigen::Index>(layout.dimension());
    CMatrix full = CMatrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        auto n = static_cast<Eigen::Index>((static_cast<std::size_t>(col) / s) % static_cast<std::size_t>(d));
        Eigen::Index base = col - n * static_cast<Eigen::Index>(s);
        for (Eigen::Index m = 0; m < d; ++m) {
            Complex v = local(m, n);
            if (v != 0.0) {
                full(base + m * static_cast<Eigen::Index>(s), col) = v;
            }
        }
    }
    return OperatorMatrix(layout, std::move(full), kind);
}

namespace {

CMatrix local_annihilation(int cutoff) {
    CMatrix a = CMatrix::Zero(cutoff, cutoff);
    for (int n = 1; n < cutoff; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

OperatorMatrix embed_ion_operator(const ModeLayout &layout, const CMatrix &local, Hermiticity kind) {
    const int levels = layout.ion_levels();
    const std::size_t s = layout.ion_stride();
    const auto dim = static_cast<Eigen::Index>(layout.dimension());
    CMatrix full = CMatrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        auto n = static_cast<Eigen::Index>(static_cast<std::size_t>(col) / s);
        Eigen::Index base = col - n * static_cast<Eigen::Index>(s);
        for (Eigen::Index m = 0; m < levels; ++m) {
            Complex v = local(m, n);
            if (v != 0.0) {
                full(base + m * static_cast<Eigen::Index>(s), col) = v;
            }
        }
    }
    return OperatorMatrix(layout, std::move(full), kind);
}

}  // namespace

OperatorMatrix ladder_op(const ModeLayout &layout, Mode mode) {
    return embed_mode_operator(layout, mode, local_annihilation(layout.cutoff(mode)));
}

OperatorMatrix number_op(const ModeLayout &layout, Mode mode) {
    const int d = layout.cutoff(mode);
    CMatrix n = CMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        n(k, k) = static_cast<double>(k);
    }
    return embed_mode_operator(layout, mode, n, Hermiticity::hermitian);
}

OperatorMatrix position_op(const ModeLayout &layout) {
    CMatrix a = local_annihilation(layout.cutoff(Mode::a));
    CMatrix x = a + a.adjoint();
    return embed_mode_operator(layout, Mode::a, x, Hermiticity::hermitian);
}

OperatorMatrix lowering_op(const ModeLayout &layout, int transition) {
    const int e = layout.excited_level(transition);
    CMatrix sigma = CMatrix::Zero(layout.ion_levels(), layout.ion_levels());
    sigma(kGround, e) = 1.0;
    return embed_ion_operator(layout, sigma, Hermiticity::general);
}

OperatorMatrix level_projector(const ModeLayout &layout, int level) {
    if (level < 0 || level >= layout.ion_levels()) {
        throw std::out_of_range("ion level outside register");
    }
    CMatrix p = CMatrix::Zero(layout.ion_levels(), layout.ion_levels());
    p(level, level) = 1.0;
    return embed_ion_operator(layout, p, Hermiticity::hermitian);
}

CMatrix hermitian_function(const CMatrix &hermitian, const std::function<Complex(double)> &f) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigendecomposition failed");
    }
    const CMatrix &v = solver.eigenvectors();
    CVector fd(solver.eigenvalues().size());
    for (Eigen::Index i = 0; i < fd.size(); ++i) {
        fd[i] = f(solver.eigenvalues()[i]);
    }
    return v * fd.asDiagonal() * v.adjoint();
}

CMatrix unitary_propagator(const CMatrix &hermitian, double t) {
    if (t == 0.0) {
        return CMatrix::Identity(hermitian.rows(), hermitian.cols());
    }
    return hermitian_function(hermitian, [t](double e) { return std::exp(-kI * e * t); });
}

CMatrix exp_anti_hermitian(const CMatrix &generator) {
    // G = -i H with H = i G Hermitian, so exp(G) = exp(-i H).
    CMatrix h = kI * generator;
    h = 0.5 * (h + h.adjoint()).eval();
    return unitary_propagator(h, 1.0);
}

StateVector basis_state(const ModeLayout &layout, const FockIndex &index) {
    StateVector state(layout);
    CVector v = CVector::Zero(static_cast<Eigen::Index>(layout.dimension()));
    v[static_cast<Eigen::Index>(layout.flat_index(index))] = 1.0;
    return StateVector(layout, std::move(v));
}

Complex overlap(const StateVector &x, const StateVector &y) {
    require_same_layout(x.layout(), y.layout());
    return x.amplitudes().dot(y.amplitudes());
}

double state_fidelity(const StateVector &x, const StateVector &y) { return std::abs(overlap(x, y)); }

namespace {

CMatrix psd_sqrt(const CMatrix &rho, double tolerance) {
    CMatrix h = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
    if (solver.eigenvalues().minCoeff() < -tolerance) {
        throw InvalidState("density operator is not positive semidefinite");
    }
    // Eigenvalues at round-off level are zeroed: their square roots would
    // otherwise contribute O(sqrt(eps)) to the fidelity.
    const double floor = static_cast<double>(h.rows()) * std::numeric_limits<double>::epsilon() *
                         std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
    CVector root(solver.eigenvalues().size());
    for (Eigen::Index i = 0; i < root.size(); ++i) {
        const double lambda = solver.eigenvalues()[i];
        root[i] = lambda > floor ? std::sqrt(lambda) : 0.0;
    }
    return solver.eigenvectors() * root.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace

double state_fidelity(const DensityOperator &rho, const DensityOperator &sigma) {
    require_same_layout(rho.layout(), sigma.layout());
    constexpr double kTol = 1e-8;
    // Tr sqrt(sqrt(rho) sigma sqrt(rho)) is the trace norm of sqrt(rho) sqrt(sigma).
    CMatrix product = psd_sqrt(rho.matrix(), kTol) * psd_sqrt(sigma.matrix(), kTol);
    Eigen::JacobiSVD<CMatrix> svd(product);
    return svd.singularValues().sum();
}

double state_fidelity(const DensityOperator &rho, const StateVector &psi) {
    require_same_layout(rho.layout(), psi.layout());
    Complex f = psi.amplitudes().dot(rho.matrix() * psi.amplitudes());
    if (f.real() < -1e-8) {
        throw InvalidState("density operator is not positive semidefinite");
    }
    return std::sqrt(std::max(0.0, f.real()));
}

DensityOperator partial_trace(const DensityOperator &rho, const std::vector<Factor> &keep) {
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace needs at least one kept factor");
    }
    const ModeLayout &in = rho.layout();
    std::array<bool, 4> kept{false, false, false, false};
    for (Factor f : keep) {
        int i = static_cast<int>(f);
        if (f == Factor::ion) {
            if (in.ion_levels() < 2) {
                throw std::invalid_argument("ion register is not part of the layout");
            }
        } else if (!in.has(static_cast<Mode>(i))) {
            throw std::invalid_argument("cannot keep absent mode " + std::string(factor_name(f)));
        }
        kept[static_cast<std::size_t>(i)] = true;
    }
    std::vector<ModeCutoff> out_modes;
    for (Mode mode : in.modes()) {
        if (kept[static_cast<std::size_t>(mode)]) {
            out_modes.push_back({mode, in.cutoff(mode)});
        }
    }
    ModeLayout out = make_layout(out_modes, kept[3] ? in.ion_levels() : 1);

    auto reduce = [&](const FockIndex &full) {
        FockIndex r;
        for (Mode mode : out.modes()) {
            r[mode] = full[mode];
        }
        r.level = kept[3] ? full.level : 0;
        return r;
    };
    auto traced_equal = [&](const FockIndex &x, const FockIndex &y) {
        for (Mode mode : in.modes()) {
            if (!kept[static_cast<std::size_t>(mode)] && x[mode] != y[mode]) {
                return false;
            }
        }
        return kept[3] || x.level == y.level;
    };

    const std::size_t dim = in.dimension();
    std::vector<FockIndex> idx(dim);
    std::vector<Eigen::Index> target(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        idx[i] = in.multi_index(i);
        target[i] = static_cast<Eigen::Index>(out.flat_index(reduce(idx[i])));
    }
    const auto odim = static_cast<Eigen::Index>(out.dimension());
    CMatrix reduced = CMatrix::Zero(odim, odim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (traced_equal(idx[i], idx[j])) {
                reduced(target[i], target[j]) +=
                    rho.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
        }
    }
    return DensityOperator(out, std::move(reduced));
}

namespace {

template <class Population>
LeakageReport leakage_impl(const ModeLayout &layout, double threshold, Population population) {
    LeakageReport report;
    report.threshold = threshold;
    const std::size_t dim = layout.dimension();
    for (std::size_t i = 0; i < dim; ++i) {
        FockIndex index = layout.multi_index(i);
        double p = population(static_cast<Eigen::Index>(i));
        for (Mode mode : layout.modes()) {
            if (index[mode] == layout.cutoff(mode) - 1) {
                report.per_mode[static_cast<std::size_t>(mode)] += p;
            }
        }
    }
    for (Mode mode : layout.modes()) {
        // A one-level mode has no room to leak into.
        if (layout.cutoff(mode) == 1) {
            report.per_mode[static_cast<std::size_t>(mode)] = 0.0;
        }
    }
    report.max = *std::max_element(report.per_mode.begin(), report.per_mode.end());
    return report;
}

}  // namespace

LeakageReport truncation_leakage(const StateVector &state, double threshold) {
    return leakage_impl(state.layout(), threshold, [&](Eigen::Index i) { return std::norm(state.amplitudes()[i]); });
}

LeakageReport truncation_leakage(const DensityOperator &rho, double threshold) {
    return leakage_impl(rho.layout(), threshold, [&](Eigen::Index i) { return rho.matrix()(i, i).real(); });
}

StateVector phase_fixed(const StateVector &state, double cutoff) {
    const CVector &v = state.amplitudes();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > cutoff) {
            Complex phase = std::conj(v[i]) / std::abs(v[i]);
            return StateVector(state.layout(), v * phase);
        }
    }
    return state;
}

}  // namespace noonforge
