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


#include "noonforge/elimination.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <gsl/gsl_integration.h>

#include "noonforge/errors.h"
#include "noonforge/evolution.h"
#include "noonforge/hamiltonians.h"
#include "noonforge/io.h"

namespace noonforge {

void gauss_legendre(int n, double a, double b, std::vector<double> &nodes, std::vector<double> &weights) {
    if (n < 1) {
        throw std::invalid_argument("Gauss-Legendre rule needs at least one node");
    }
    gsl_integration_glfixed_table *table = gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n));
    if (table == nullptr) {
        throw std::runtime_error("could not allocate Gauss-Legendre table");
    }
    nodes.resize(static_cast<std::size_t>(n));
    weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        gsl_integration_glfixed_point(a, b, static_cast<std::size_t>(i), &nodes[static_cast<std::size_t>(i)],
                                      &weights[static_cast<std::size_t>(i)], table);
    }
    gsl_integration_glfixed_table_free(table);
}

namespace {

struct Prepared {
    CMatrix p;
    CMatrix h0;  // with P H1 P moved in
    CMatrix h1;  // with P H1 P removed
    Eigen::VectorXd energies;
    CMatrix vectors;
    CMatrix m;   // H1 in the H0 eigenbasis
    CMatrix left;  // P H1 V
};

Prepared prepare(const OperatorMatrix &h0, const OperatorMatrix &h1, const OperatorMatrix &p) {
    if (!(h0.layout() == h1.layout()) || !(h0.layout() == p.layout())) {
        throw std::invalid_argument("H0, H1 and P must share a layout");
    }
    const CMatrix &pm = p.matrix();
    const double scale = std::max(1.0, inf_norm(pm));
    if (inf_norm(pm * pm - pm) > 1e-12 * scale || inf_norm(pm - pm.adjoint()) > 1e-12 * scale) {
        throw std::invalid_argument("P is not a Hermitian projector");
    }
    if (h0.hermiticity_error() > 1e-12 || h1.hermiticity_error() > 1e-12) {
        throw std::invalid_argument("H0 and H1 must be Hermitian");
    }
    const auto d = pm.rows();
    CMatrix q = CMatrix::Identity(d, d) - pm;
    double leak = inf_norm(pm * h0.matrix() * q);
    if (leak > 1e-9 * std::max(1.0, inf_norm(h0.matrix()))) {
        warn("P H0 Q is not negligible (" + format_double(leak) + "); the projector expansion assumes it vanishes");
    }
    Prepared out;
    out.p = pm;
    CMatrix php = pm * h1.matrix() * pm;
    out.h0 = h0.matrix() + php;
    out.h1 = h1.matrix() - php;
    out.h0 = 0.5 * (out.h0 + out.h0.adjoint()).eval();
    out.h1 = 0.5 * (out.h1 + out.h1.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(out.h0);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigendecomposition failed");
    }
    out.energies = solver.eigenvalues();
    out.vectors = solver.eigenvectors();
    out.m = out.vectors.adjoint() * out.h1 * out.vectors;
    out.left = pm * out.h1 * out.vectors;
    return out;
}

// (1/i) P H1 V (M o K) V^dag P + P H0 P
CMatrix assemble(const Prepared &prep, const CMatrix &kernel) {
    CMatrix inner = prep.m.cwiseProduct(kernel);
    CMatrix integral = -kI * (prep.left * inner * prep.vectors.adjoint() * prep.p);
    return prep.p * prep.h0 * prep.p + integral;
}

CMatrix quadrature_kernel(const Prepared &prep, double t, int n, ProjectorAverage average) {
    std::vector<double> nodes, weights;
    gauss_legendre(n, 0.0, t, nodes, weights);
    const auto d = prep.energies.size();
    CMatrix k = CMatrix::Zero(d, d);
    for (std::size_t q = 0; q < nodes.size(); ++q) {
        const double tau = nodes[q];
        double w = weights[q];
        if (average == ProjectorAverage::window) {
            w *= 1.0 - tau / t;
        }
        CVector phase(d);
        for (Eigen::Index j = 0; j < d; ++j) {
            phase[j] = std::exp(-kI * (prep.energies[j] * tau));
        }
        // e^{-i (d_j - d_k) tau} = phase_j * conj(phase_k)
        k.noalias() += w * (phase * phase.adjoint());
    }
    return k;
}

Complex closed_form_entry(double omega, double t, ProjectorAverage average) {
    const double x = omega * t;
    if (std::abs(x) < 1e-4) {
        if (average == ProjectorAverage::instantaneous) {
            return t * (1.0 - kI * x / 2.0 - x * x / 6.0);
        }
        return t * (0.5 - kI * x / 6.0 - x * x / 24.0);
    }
    Complex a = (1.0 - std::exp(-kI * x)) / (kI * omega);
    if (average == ProjectorAverage::instantaneous) {
        return a;
    }
    return 1.0 / (kI * omega) - a / (kI * omega * t);
}

EffectiveHamiltonian package(const ModeLayout &layout, CMatrix raw, int nodes, bool converged) {
    CMatrix herm = 0.5 * (raw + raw.adjoint());
    double residual = inf_norm(0.5 * (raw - raw.adjoint()));
    return {OperatorMatrix(layout, std::move(raw)), OperatorMatrix(layout, std::move(herm), Hermiticity::hermitian),
            residual, nodes, converged};
}

}  // namespace

EffectiveHamiltonian effective_hamiltonian_projector(const OperatorMatrix &h0, const OperatorMatrix &h1,
                                                     const OperatorMatrix &p, double t,
                                                     const ProjectorOptions &options) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("integration time must be positive");
    }
    if (options.quad_points < 1) {
        throw std::invalid_argument("quad_points must be >= 1");
    }
    Prepared prep = prepare(h0, h1, p);
    int n = options.quad_points;
    CMatrix current = assemble(prep, quadrature_kernel(prep, t, n, options.average));
    while (2 * n <= options.max_quad_points) {
        CMatrix finer = assemble(prep, quadrature_kernel(prep, t, 2 * n, options.average));
        double change = inf_norm(finer - current) / std::max(inf_norm(finer), 1e-300);
        n *= 2;
        current = std::move(finer);
        if (change < options.quad_tolerance) {
            return package(h0.layout(), std::move(current), n, true);
        }
    }
    warn("projector quadrature did not converge with " + std::to_string(n) + " nodes");
    return package(h0.layout(), std::move(current), n, false);
}

CMatrix effective_hamiltonian_closed_form(const OperatorMatrix &h0, const OperatorMatrix &h1,
                                          const OperatorMatrix &p, double t, ProjectorAverage average) {
    Prepared prep = prepare(h0, h1, p);
    const auto d = prep.energies.size();
    CMatrix k(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index l = 0; l < d; ++l) {
            k(j, l) = closed_form_entry(prep.energies[j] - prep.energies[l], t, average);
        }
    }
    return assemble(prep, k);
}

EliminationReport verify_elimination(const OperatorMatrix &full_h, const OperatorMatrix &eff_h,
                                     const StateVector &psi0, double t, int samples) {
    if (!(full_h.layout() == eff_h.layout()) || !(full_h.layout() == psi0.layout())) {
        throw std::invalid_argument("verify_elimination needs one shared layout");
    }
    if (samples < 1 || !(t >= 0.0)) {
        throw std::invalid_argument("verify_elimination needs samples >= 1 and t >= 0");
    }
    UnitaryEvolver full(full_h), eff(eff_h);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    EliminationReport report;
    for (int k = 1; k <= samples; ++k) {
        double frac = k == samples ? 1.0 : std::fmod(k * inv_phi, 1.0);
        report.times.push_back(frac * t);
    }
    std::sort(report.times.begin(), report.times.end());
    for (double s : report.times) {
        double f = state_fidelity(full.propagate(psi0, s), eff.propagate(psi0, s));
        report.infidelity.push_back(std::max(0.0, 1.0 - f));
    }
    report.mean_infidelity =
        std::accumulate(report.infidelity.begin(), report.infidelity.end(), 0.0) / report.infidelity.size();
    report.max_infidelity = *std::max_element(report.infidelity.begin(), report.infidelity.end());
    return report;
}

CrossKerrCheck check_cross_kerr_elimination(const PhysicalParams &base, double delta2_over_omega,
                                            double nu_over_delta2, const CrossKerrCheckOptions &options) {
    const double omega_ref = options.omega_reference != 0.0 ? options.omega_reference : base.omega_rabi;
    if (!(delta2_over_omega != 0.0) || !(nu_over_delta2 > 0.0) || omega_ref == 0.0) {
        throw std::invalid_argument("cross-Kerr check needs nonzero delta2/Omega, positive nu/delta2 and a nonzero "
                                    "reference coupling");
    }
    PhysicalParams p = base;
    p.delta2 = delta2_over_omega * std::abs(omega_ref);
    p.nu = nu_over_delta2 * std::abs(p.delta2);
    PhysicalParams ref = p;
    ref.omega_rabi = omega_ref;
    ModeLayout layout = make_layout({{Mode::a, options.cutoff_a}, {Mode::b2, options.cutoff_b2}}, 2);
    OperatorMatrix full = h_antinode(layout, p);
    OperatorMatrix eff = h_cross_kerr(layout, p);
    CrossKerrCheck out;
    out.delta2_over_omega = delta2_over_omega;
    out.nu_over_delta2 = nu_over_delta2;
    out.t_pi = kPi / std::abs(ref.g_ck());
    out.fock = verify_elimination(full, eff, basis_state(layout, {.a = 1, .b2 = 1}), out.t_pi, options.samples);
    StateVector sup = basis_state(layout, {}) + basis_state(layout, {.a = 1}) + basis_state(layout, {.b2 = 1}) +
                      basis_state(layout, {.a = 1, .b2 = 1});
    out.superposition = verify_elimination(full, eff, sup.normalized(), out.t_pi, options.samples);
    return out;
}

}  // namespace noonforge
