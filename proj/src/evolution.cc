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


#include "noonforge/evolution.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <boost/numeric/odeint.hpp>

#include "noonforge/errors.h"

namespace noonforge {

namespace odeint = boost::numeric::odeint;

StateVector evolve_unitary(const OperatorMatrix &hamiltonian, const StateVector &psi0, double t) {
    if (hamiltonian.kind() != Hermiticity::hermitian) {
        throw std::invalid_argument("evolve_unitary needs a Hermitian-flagged Hamiltonian");
    }
    if (!(hamiltonian.layout() == psi0.layout())) {
        throw std::invalid_argument("layout mismatch between Hamiltonian and state");
    }
    return StateVector(psi0.layout(), unitary_propagator(hamiltonian.matrix(), t) * psi0.amplitudes());
}

UnitaryEvolver::UnitaryEvolver(const OperatorMatrix &hamiltonian) : layout_(hamiltonian.layout()) {
    if (hamiltonian.kind() != Hermiticity::hermitian) {
        throw std::invalid_argument("UnitaryEvolver needs a Hermitian-flagged Hamiltonian");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hamiltonian.matrix());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigendecomposition failed");
    }
    energies_ = solver.eigenvalues();
    vectors_ = solver.eigenvectors();
}

StateVector UnitaryEvolver::propagate(const StateVector &psi0, double t) const {
    if (!(layout_ == psi0.layout())) {
        throw std::invalid_argument("layout mismatch between Hamiltonian and state");
    }
    CVector c = vectors_.adjoint() * psi0.amplitudes();
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        c[i] *= std::exp(-kI * (energies_[i] * t));
    }
    return StateVector(layout_, vectors_ * c);
}

std::vector<CollapseChannel> standard_channels(const ModeLayout &layout, const PhysicalParams &params,
                                               bool include_spontaneous_emission) {
    std::vector<CollapseChannel> out;
    if (layout.has(Mode::b1) && params.gamma > 0.0) {
        out.push_back({"b1", ladder_op(layout, Mode::b1), params.gamma});
    }
    if (layout.has(Mode::b2) && params.gamma > 0.0) {
        out.push_back({"b2", ladder_op(layout, Mode::b2), params.gamma});
    }
    if (layout.has(Mode::a) && params.gamma_motion > 0.0) {
        out.push_back({"a", ladder_op(layout, Mode::a), params.gamma_motion});
    }
    if (include_spontaneous_emission && params.gamma_e > 0.0 && layout.ion_levels() >= 2) {
        out.push_back({"sigma2", lowering_op(layout, 2), params.gamma_e});
    }
    return out;
}

namespace {

// Precomputed generator: -i (K rho - rho K^dag) + sum 2 r J rho J^dag with
// K = H - i sum r J^dag J.
class LindbladGenerator {
   public:
    LindbladGenerator(const CMatrix &hamiltonian, const std::vector<CollapseChannel> &channels) {
        k_ = hamiltonian;
        for (const auto &c : channels) {
            if (!(c.rate >= 0.0) || !std::isfinite(c.rate)) {
                throw std::invalid_argument("collapse rate of channel '" + c.name + "' must be >= 0");
            }
            if (c.rate == 0.0) {
                continue;
            }
            const CMatrix &j = c.op.matrix();
            k_ -= kI * c.rate * (j.adjoint() * j);
            jumps_.push_back(j);
            jumps_dag_.push_back(j.adjoint());
            rates_.push_back(2.0 * c.rate);
        }
    }

    void apply(const CMatrix &rho, CMatrix &out) const {
        out.noalias() = -kI * (k_ * rho);
        out.noalias() += kI * (rho * k_.adjoint());
        for (std::size_t i = 0; i < jumps_.size(); ++i) {
            out.noalias() += rates_[i] * (jumps_[i] * rho * jumps_dag_[i]);
        }
        out = 0.5 * (out + out.adjoint()).eval();
    }

   private:
    CMatrix k_;
    std::vector<CMatrix> jumps_;
    std::vector<CMatrix> jumps_dag_;
    std::vector<double> rates_;
};

using FlatState = std::vector<Complex>;

void symmetrize(FlatState &x, Eigen::Index d) {
    Eigen::Map<CMatrix> m(x.data(), d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        m(c, c) = Complex(m(c, c).real(), 0.0);
        for (Eigen::Index r = c + 1; r < d; ++r) {
            Complex v = 0.5 * (m(r, c) + std::conj(m(c, r)));
            m(r, c) = v;
            m(c, r) = std::conj(v);
        }
    }
}

double min_eigenvalue(const CMatrix &rho) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

}  // namespace

CMatrix lindblad_rhs(const CMatrix &hamiltonian, const std::vector<CollapseChannel> &channels, const CMatrix &rho) {
    LindbladGenerator gen(hamiltonian, channels);
    CMatrix out(rho.rows(), rho.cols());
    gen.apply(rho, out);
    return out;
}

MasterResult evolve_master(const EvolutionSpec &spec, const DensityOperator &rho0) {
    const ModeLayout &layout = rho0.layout();
    if (!(spec.hamiltonian.layout() == layout)) {
        throw std::invalid_argument("layout mismatch between Hamiltonian and initial state");
    }
    if (spec.hamiltonian.hermiticity_error() > 1e-12) {
        throw std::invalid_argument("evolve_master needs a Hermitian Hamiltonian");
    }
    for (const auto &c : spec.collapse_ops) {
        if (!(c.op.layout() == layout)) {
            throw std::invalid_argument("layout mismatch in collapse channel '" + c.name + "'");
        }
    }
    if (!(spec.duration >= 0.0) || !std::isfinite(spec.duration)) {
        throw std::invalid_argument("duration must be finite and >= 0");
    }
    if (spec.samples < 2) {
        throw std::invalid_argument("at least two samples (start and end) are required");
    }
    if (spec.step_control == StepControl::fixed && spec.fixed_steps < 1) {
        throw std::invalid_argument("fixed_steps must be >= 1");
    }
    rho0.validate();

    const auto d = static_cast<Eigen::Index>(layout.dimension());
    LindbladGenerator gen(spec.hamiltonian.matrix(), spec.collapse_ops);
    CMatrix scratch(d, d);
    auto system = [&](const FlatState &x, FlatState &dxdt, double /*t*/) {
        Eigen::Map<const CMatrix> rho(x.data(), d, d);
        gen.apply(rho, scratch);
        dxdt.resize(x.size());
        Eigen::Map<CMatrix>(dxdt.data(), d, d) = scratch;
    };

    FlatState x(static_cast<std::size_t>(d * d));
    Eigen::Map<CMatrix>(x.data(), d, d) = rho0.matrix();
    symmetrize(x, d);

    MasterResult result{rho0, {}, 0.0, 0.0, 0, 0};
    const Complex trace0 = rho0.trace();
    result.min_eigenvalue = std::numeric_limits<double>::infinity();
    auto record = [&](double t) {
        Eigen::Map<const CMatrix> rho(x.data(), d, d);
        MasterSample s{t, rho.trace(), min_eigenvalue(rho), {}};
        for (const auto &o : spec.observables) {
            s.values.push_back((o.op.matrix() * rho).trace());
        }
        result.max_trace_drift = std::max(result.max_trace_drift, std::abs(s.trace - trace0));
        result.min_eigenvalue = std::min(result.min_eigenvalue, s.min_eigenvalue);
        result.samples.push_back(std::move(s));
    };

    record(0.0);
    const double duration = spec.duration;
    if (duration > 0.0) {
        if (spec.step_control == StepControl::fixed) {
            odeint::runge_kutta4<FlatState> stepper;
            const double dt = duration / spec.fixed_steps;
            int next_sample = 1;
            for (int step = 1; step <= spec.fixed_steps; ++step) {
                stepper.do_step(system, x, (step - 1) * dt, dt);
                symmetrize(x, d);
                ++result.accepted_steps;
                // Sample at the step boundary closest to each requested time.
                while (next_sample < spec.samples &&
                       step == static_cast<int>(std::lround(static_cast<double>(next_sample) * spec.fixed_steps /
                                                            (spec.samples - 1)))) {
                    record(step * dt);
                    ++next_sample;
                }
            }
            while (next_sample < spec.samples) {
                record(duration);
                ++next_sample;
            }
        } else {
            auto stepper = odeint::make_controlled(spec.abs_tol, spec.rel_tol, odeint::runge_kutta_dopri5<FlatState>());
            double t = 0.0;
            double dt = duration * 1e-4;
            const double min_dt = duration * 1e-14;
            for (int k = 1; k < spec.samples; ++k) {
                const double t_target = duration * k / (spec.samples - 1);
                while (t < t_target) {
                    if (result.accepted_steps + result.rejected_steps >= spec.max_steps) {
                        throw IntegrationFailure("step budget exhausted", t);
                    }
                    double step = std::min(dt, t_target - t);
                    bool last = step == t_target - t;
                    double t_before = t;
                    if (stepper.try_step(system, x, t, step) == odeint::success) {
                        ++result.accepted_steps;
                        symmetrize(x, d);
                        if (last) {
                            t = t_target;
                        }
                        // Keep the controller's suggestion unless the step was clipped.
                        if (!last || step > dt) {
                            dt = step;
                        }
                    } else {
                        ++result.rejected_steps;
                        dt = step;
                        if (dt < min_dt) {
                            throw IntegrationFailure("step size underflow", t_before);
                        }
                    }
                    for (const Complex &v : x) {
                        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                            throw IntegrationFailure("non-finite density matrix", t_before);
                        }
                    }
                }
                record(t_target);
            }
        }
    } else {
        for (int k = 1; k < spec.samples; ++k) {
            record(0.0);
        }
    }
    result.final_state = DensityOperator(layout, Eigen::Map<const CMatrix>(x.data(), d, d));
    return result;
}

}  // namespace noonforge
