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


#include "noonforge/classical.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <boost/numeric/odeint.hpp>

#include "noonforge/errors.h"

namespace noonforge {

namespace odeint = boost::numeric::odeint;
using Complex = std::complex<double>;

ClassicalState classical_rhs(const PhysicalParams &params, const ClassicalState &s) {
    const Complex i{0.0, 1.0};
    const double g0 = params.g0();
    ClassicalState d;
    d.alpha = -(params.gamma_motion + i * params.nu) * s.alpha + i * g0 * std::norm(s.beta);
    d.beta = -(params.gamma + i * params.delta1 - i * g0 * 2.0 * s.alpha.real()) * s.beta + i * params.pump;
    return d;
}

double classical_rate_scale(const PhysicalParams &params) {
    return std::max({params.nu, std::abs(params.delta1), params.gamma, params.gamma_motion});
}

double steady_state_residual(const PhysicalParams &params, const ClassicalState &s) {
    ClassicalState d = classical_rhs(params, s);
    double size = std::max({std::abs(s.alpha), std::abs(s.beta), 1.0});
    return std::hypot(std::abs(d.alpha), std::abs(d.beta)) / (classical_rate_scale(params) * size);
}

std::vector<ClassicalSample> classical_trajectory(const PhysicalParams &params, const ClassicalState &initial,
                                                  double t, const ClassicalTrajectoryOptions &options) {
    params.validate();
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("trajectory duration must be finite and >= 0");
    }
    if (options.samples < 2) {
        throw std::invalid_argument("at least two samples are required");
    }
    if (!std::isfinite(std::abs(initial.alpha)) || !std::isfinite(std::abs(initial.beta))) {
        throw std::invalid_argument("initial amplitudes must be finite");
    }
    using State = std::vector<Complex>;
    auto system = [&](const State &x, State &dxdt, double) {
        ClassicalState d = classical_rhs(params, {x[0], x[1]});
        dxdt = {d.alpha, d.beta};
    };
    State x{initial.alpha, initial.beta};
    std::vector<ClassicalSample> out{{0.0, initial}};
    if (t == 0.0) {
        for (int k = 1; k < options.samples; ++k) {
            out.push_back({0.0, initial});
        }
        return out;
    }
    auto stepper = odeint::make_controlled(options.abs_tol, options.rel_tol, odeint::runge_kutta_dopri5<State>());
    double now = 0.0;
    double dt = std::min(t, 1.0 / classical_rate_scale(params)) * 1e-2;
    for (int k = 1; k < options.samples; ++k) {
        const double target = t * k / (options.samples - 1);
        while (now < target) {
            double step = std::min(dt, target - now);
            bool last = step == target - now;
            double before = now;
            if (stepper.try_step(system, x, now, step) == odeint::success) {
                if (last) {
                    now = target;
                }
                if (!last || step > dt) {
                    dt = step;
                }
            } else {
                dt = step;
                if (dt < t * 1e-15) {
                    throw IntegrationFailure("step size underflow in mean-field trajectory", before);
                }
            }
            if (!(std::abs(x[0]) < options.overflow_guard) || !(std::abs(x[1]) < options.overflow_guard)) {
                throw IntegrationFailure("mean-field trajectory diverged", before);
            }
        }
        out.push_back({target, {x[0], x[1]}});
    }
    return out;
}

Complex pump_for_cavity_amplitude(const PhysicalParams &params, Complex beta) {
    const Complex i{0.0, 1.0};
    const double g0 = params.g0();
    Complex alpha = g0 * std::norm(beta) / (params.nu - i * params.gamma_motion);
    return beta * (params.delta1 - 2.0 * g0 * alpha.real() - i * params.gamma);
}

Eigen::Matrix4cd stability_matrix(const PhysicalParams &params, const ClassicalState &s) {
    const Complex i{0.0, 1.0};
    const double g0 = params.g0();
    const double nu = params.nu, gm = params.gamma_motion, gc = params.gamma;
    const Complex b = s.beta, bc = std::conj(s.beta);
    const double shift = 2.0 * g0 * s.alpha.real();
    Eigen::Matrix4cd m;
    m << -gm - i * nu, 0.0, i * g0 * bc, i * g0 * b,
         0.0, -gm + i * nu, -i * g0 * bc, -i * g0 * b,
         i * g0 * b, i * g0 * b, -gc - i * params.delta1 + i * shift, 0.0,
         -i * g0 * bc, -i * g0 * bc, 0.0, -gc + i * params.delta1 - i * shift;
    return m;
}

ClassicalState classical_steady_state(const PhysicalParams &params, const SteadyStateOptions &options) {
    params.validate();
    if (!(options.damping > 0.0 && options.damping <= 1.0)) {
        throw std::invalid_argument("damping must lie in (0, 1]");
    }
    const Complex i{0.0, 1.0};
    const double g0 = params.g0();
    ClassicalState s;
    if (params.pump == 0.0) {
        return s;
    }
    auto map = [&](const ClassicalState &x) {
        ClassicalState y;
        y.alpha = g0 * std::norm(x.beta) / (params.nu - i * params.gamma_motion);
        Complex denom = params.delta1 - 2.0 * g0 * y.alpha.real() - i * params.gamma;
        if (denom == 0.0) {
            throw NoConvergence("steady-state map hit a zero denominator", {x.alpha, x.beta});
        }
        y.beta = params.pump / denom;
        return y;
    };

    double best = std::numeric_limits<double>::infinity();
    ClassicalState best_state = s;
    auto consider = [&](const ClassicalState &x) {
        double r = steady_state_residual(params, x);
        if (r < best) {
            best = r;
            best_state = x;
        }
        return r;
    };

    // Start from the undamped-shift guess.
    s.beta = params.pump / (params.delta1 - i * params.gamma);
    s.alpha = g0 * std::norm(s.beta) / (params.nu - i * params.gamma_motion);
    const int fixed_point_budget = options.max_iterations;
    for (int it = 0; it < fixed_point_budget; ++it) {
        if (consider(s) <= options.tolerance) {
            return s;
        }
        ClassicalState y = map(s);
        ClassicalState next{s.alpha + options.damping * (y.alpha - s.alpha), s.beta + options.damping * (y.beta - s.beta)};
        if (!std::isfinite(std::abs(next.alpha)) || !std::isfinite(std::abs(next.beta))) {
            break;
        }
        bool stalled = next.alpha == s.alpha && next.beta == s.beta;
        s = next;
        if (stalled) {
            break;
        }
    }

    // Newton on the mean-field equations; the stability matrix is their
    // exact Jacobian in (alpha, alpha*, beta, beta*) coordinates.
    s = best_state;
    for (int it = 0; it < 100; ++it) {
        if (consider(s) <= options.tolerance) {
            return s;
        }
        ClassicalState f = classical_rhs(params, s);
        Eigen::Vector4cd rhs(-f.alpha, -std::conj(f.alpha), -f.beta, -std::conj(f.beta));
        Eigen::Vector4cd step = stability_matrix(params, s).fullPivLu().solve(rhs);
        s.alpha += step[0];
        s.beta += step[2];
        if (!std::isfinite(std::abs(s.alpha)) || !std::isfinite(std::abs(s.beta))) {
            break;
        }
    }
    consider(s);
    if (best <= options.tolerance) {
        return best_state;
    }
    throw NoConvergence("mean-field steady state did not converge (residual " + std::to_string(best) + ")",
                        {best_state.alpha, best_state.beta});
}

StabilityReport stability_analysis(const PhysicalParams &params, const ClassicalState &steady,
                                   double fixed_point_tolerance) {
    double r = steady_state_residual(params, steady);
    if (!(r <= fixed_point_tolerance)) {
        throw std::invalid_argument("stability_analysis needs a fixed point (residual " + std::to_string(r) + ")");
    }
    StabilityReport report;
    report.matrix_m = stability_matrix(params, steady);
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(report.matrix_m);
    report.eigenvalues = solver.eigenvalues();
    report.stable = (report.eigenvalues.real().array() < 0.0).all();
    return report;
}

}  // namespace noonforge
