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


#include "noonforge/cli/commands.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>

#include "json.hpp"
#include "noonforge/classical.h"
#include "noonforge/elimination.h"
#include "noonforge/errors.h"
#include "noonforge/evolution.h"
#include "noonforge/fluctuations.h"
#include "noonforge/hamiltonians.h"
#include "noonforge/io.h"
#include "noonforge/protocol.h"
#include "noonforge/random.h"

namespace noonforge::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json provenance_json(const RunContext &ctx) {
    return {{"tool", "noonforge"},
            {"version", kVersion},
            {"command", ctx.command},
            {"config_hash", fnv1a_hex(ctx.config.canonical)},
            {"seed", ctx.config.seed}};
}

std::ofstream open_output(const RunContext &ctx, const std::string &name) {
    std::error_code ec;
    fs::create_directories(ctx.out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory '" + ctx.out_dir.string() + "': " + ec.message());
    }
    fs::path path = ctx.out_dir / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

void finish_output(std::ofstream &out, const RunContext &ctx, const std::string &name) {
    out.flush();
    if (!out) {
        throw IoError("write to '" + (ctx.out_dir / name).string() + "' failed");
    }
}

void write_csv_file(const RunContext &ctx, const std::string &name, const std::function<void(std::ostream &)> &body) {
    std::ofstream out = open_output(ctx, name);
    for (const std::string &line : provenance_lines(ctx)) {
        out << "# " << line << '\n';
    }
    body(out);
    finish_output(out, ctx, name);
}

void write_json_file(const RunContext &ctx, const std::string &name, json doc) {
    doc["provenance"] = provenance_json(ctx);
    std::ofstream out = open_output(ctx, name);
    out << doc.dump(2) << '\n';
    finish_output(out, ctx, name);
}

void log_line(const RunContext &ctx, const std::string &line) {
    if (ctx.log) {
        *ctx.log << line << '\n';
    }
}

std::string hz_text(double angular) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "2pi*%.6g Hz", angular / kTwoPi);
    return buf;
}

const PhysicalParams &require_params(const RunContext &ctx) {
    if (!ctx.config.preset && !ctx.config.has_params) {
        throw ConfigError("command '" + ctx.command + "' needs 'preset' or 'params'");
    }
    ctx.config.params.validate();
    return ctx.config.params;
}

ModeLayout default_layout(const std::string &model) {
    if (model == "full_pumped") {
        return make_layout({{Mode::a, 6}, {Mode::b1, 4}}, 2);
    }
    if (model == "antinode") {
        return make_layout({{Mode::a, 6}, {Mode::b2, 3}}, 2);
    }
    if (model == "cross_kerr") {
        return make_layout({{Mode::a, 6}, {Mode::b2, 3}}, 1);
    }
    if (model == "jc") {
        return make_layout({{Mode::b2, 3}}, 2);
    }
    if (model == "rabi") {
        return make_layout(std::vector<ModeCutoff>{}, 2);
    }
    return make_layout({{Mode::a, 6}, {Mode::b1, 4}}, 1);
}

ModeLayout layout_for(const RunContext &ctx, const std::string &model) {
    return ctx.config.layout ? ctx.config.layout->build() : default_layout(model);
}

PhysicalParams params_for_model(const RunContext &ctx, const HamiltonianConfig &h) {
    if (h.model == "rabi") {
        return ctx.config.params;
    }
    return require_params(ctx);
}

OperatorMatrix build_hamiltonian(const HamiltonianConfig &h, const ModeLayout &layout, const PhysicalParams &p) {
    if (h.model == "full_pumped") {
        return h_full_pumped(layout, p);
    }
    if (h.model == "optomech") {
        return h_optomech(layout, p, h.keep_cavity_shift);
    }
    if (h.model == "linearized" || h.model == "beamsplitter") {
        ClassicalState steady;
        if (!h.beta_bar || (h.model == "linearized" && !h.alpha_bar)) {
            steady = classical_steady_state(p);
        }
        if (h.alpha_bar) {
            steady.alpha = *h.alpha_bar;
        }
        if (h.beta_bar) {
            steady.beta = *h.beta_bar;
        }
        return h.model == "linearized" ? h_linearized(layout, p, steady, h.keep_cubic)
                                       : h_beamsplitter(layout, p, steady.beta);
    }
    if (h.model == "antinode") {
        return h_antinode(layout, p);
    }
    if (h.model == "cross_kerr") {
        return h_cross_kerr(layout, p);
    }
    if (h.model == "jc") {
        return h_jc_resonant(layout, p);
    }
    if (h.model == "rabi") {
        return h_rabi_drive(layout, h.rabi);
    }
    throw ConfigError("unknown model '" + h.model + "'");
}

bool is_diagonal(const CMatrix &m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i != j && m(i, j) != Complex(0.0, 0.0)) {
                return false;
            }
        }
    }
    return true;
}

// Ascending spectrum. Diagonal operators are read off exactly.
std::vector<double> spectrum(const OperatorMatrix &h) {
    std::vector<double> out;
    if (is_diagonal(h.matrix())) {
        for (Eigen::Index i = 0; i < h.matrix().rows(); ++i) {
            out.push_back(h.matrix()(i, i).real());
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.matrix(), Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        out.push_back(solver.eigenvalues()(i));
    }
    return out;
}

Observable make_observable(const ModeLayout &layout, const std::string &name) {
    auto mode_op = [&](Mode m) {
        if (!layout.has(m)) {
            throw ConfigError("observable '" + name + "' needs mode " + std::string(mode_name(m)) + " in the layout");
        }
        return number_op(layout, m);
    };
    if (name == "n_a") {
        return {name, mode_op(Mode::a)};
    }
    if (name == "n_b1") {
        return {name, mode_op(Mode::b1)};
    }
    if (name == "n_b2") {
        return {name, mode_op(Mode::b2)};
    }
    if (name == "x") {
        mode_op(Mode::a);
        return {name, position_op(layout)};
    }
    if (name == "p_g") {
        return {name, level_projector(layout, kGround)};
    }
    const int transition = name == "p_e1" ? 1 : 2;
    int level = 0;
    try {
        level = layout.excited_level(transition);
    } catch (const std::invalid_argument &) {
        throw ConfigError("observable '" + name + "' needs more ion levels");
    }
    return {name, level_projector(layout, level)};
}

}  // namespace

std::vector<std::string> provenance_lines(const RunContext &ctx) {
    return {"noonforge " + std::string(kVersion), "command " + ctx.command,
            "config_hash " + fnv1a_hex(ctx.config.canonical), "seed " + std::to_string(ctx.config.seed)};
}

void cmd_hamiltonian(const RunContext &ctx) {
    const HamiltonianConfig h = ctx.config.hamiltonian.value_or(HamiltonianConfig{});
    const PhysicalParams p = params_for_model(ctx, h);
    const ModeLayout layout = layout_for(ctx, h.model);
    const OperatorMatrix ham = build_hamiltonian(h, layout, p);

    if (h.dump_matrix) {
        write_csv_file(ctx, "hamiltonian.csv", [&](std::ostream &out) { write_operator_csv(out, ham.matrix()); });
    }
    std::vector<double> energies = spectrum(ham);
    const std::size_t k =
        h.eigenvalues == 0 ? energies.size() : std::min(energies.size(), static_cast<std::size_t>(h.eigenvalues));
    energies.resize(k);
    write_csv_file(ctx, "spectrum.csv", [&](std::ostream &out) {
        CsvWriter csv(out, {"index", "energy"});
        for (std::size_t i = 0; i < energies.size(); ++i) {
            csv.row({std::to_string(i), format_double(energies[i])});
        }
    });

    json doc = {{"model", h.model},
                {"layout", layout.describe()},
                {"dimension", layout.dimension()},
                {"hermiticity_error", ham.hermiticity_error()},
                {"lowest_energies", energies}};
    if (p.delta0 != 0.0) {
        doc["g0"] = p.g0();
        doc["g0_hz"] = p.g0() / kTwoPi;
        log_line(ctx, "g0 = " + hz_text(p.g0()));
    }
    if (p.delta2 != 0.0) {
        doc["g_ck"] = p.g_ck();
        doc["g_ck_hz"] = p.g_ck() / kTwoPi;
        log_line(ctx, "g_ck = " + hz_text(p.g_ck()));
    }
    write_json_file(ctx, "hamiltonian.json", doc);
    log_line(ctx, "model " + h.model + " on " + layout.describe() + ", dimension " + std::to_string(layout.dimension()));
}

void cmd_evolve(const RunContext &ctx) {
    const EvolveConfig e = ctx.config.evolve.value_or(EvolveConfig{});
    const PhysicalParams p = params_for_model(ctx, e.hamiltonian);
    const ModeLayout layout = layout_for(ctx, e.hamiltonian.model);
    const OperatorMatrix ham = build_hamiltonian(e.hamiltonian, layout, p);
    const StateVector psi0 = basis_state(layout, e.initial);

    std::vector<Observable> observables;
    for (const std::string &name : e.observables) {
        observables.push_back(make_observable(layout, name));
    }

    std::vector<MasterSample> samples;
    json summary;
    if (e.lindblad || e.step_control == "fixed") {
        EvolutionSpec spec;
        spec.hamiltonian = ham;
        if (e.lindblad) {
            spec.collapse_ops = standard_channels(layout, p, e.spontaneous_emission);
        }
        spec.duration = e.duration;
        spec.abs_tol = e.abs_tol;
        spec.rel_tol = e.rel_tol;
        spec.step_control = e.step_control == "fixed" ? StepControl::fixed : StepControl::adaptive;
        spec.fixed_steps = e.fixed_steps;
        spec.samples = e.samples;
        spec.observables = observables;
        MasterResult r = evolve_master(spec, DensityOperator::from_pure(psi0));
        samples = std::move(r.samples);
        LeakageReport leak = truncation_leakage(r.final_state);
        if (leak.exceeded()) {
            warn("truncation leakage " + format_double(leak.max) + " at the end of the run");
        }
        summary = {{"method", e.lindblad ? "lindblad" : "master_unitary"},
                   {"step_control", e.step_control},
                   {"max_trace_drift", r.max_trace_drift},
                   {"min_eigenvalue", r.min_eigenvalue},
                   {"accepted_steps", r.accepted_steps},
                   {"rejected_steps", r.rejected_steps},
                   {"final_leakage", leak.max}};
    } else {
        if (!(e.duration >= 0.0)) {
            throw std::invalid_argument("duration must be >= 0");
        }
        UnitaryEvolver evolver(ham);
        double max_drift = 0.0;
        double leak_max = 0.0;
        for (int k = 0; k < e.samples; ++k) {
            const double t = e.duration * k / (e.samples - 1);
            StateVector psi = evolver.propagate(psi0, t);
            MasterSample s{t, Complex(psi.norm() * psi.norm(), 0.0), 0.0, {}};
            for (const Observable &o : observables) {
                s.values.push_back(o.op.expectation(psi));
            }
            max_drift = std::max(max_drift, std::abs(s.trace - 1.0));
            leak_max = truncation_leakage(psi).max;
            samples.push_back(std::move(s));
        }
        if (leak_max > kDefaultLeakageThreshold) {
            warn("truncation leakage " + format_double(leak_max) + " at the end of the run");
        }
        summary = {{"method", "unitary_exact"}, {"max_trace_drift", max_drift}, {"final_leakage", leak_max}};
    }

    write_csv_file(ctx, "trajectory.csv", [&](std::ostream &out) {
        CsvWriter csv(out, {"t_seconds", "observable_name", "re", "im"});
        for (const MasterSample &s : samples) {
            csv.row({format_double(s.t), "trace", format_double(s.trace.real()), format_double(s.trace.imag())});
            for (std::size_t i = 0; i < observables.size(); ++i) {
                csv.row({format_double(s.t), observables[i].name, format_double(s.values[i].real()),
                         format_double(s.values[i].imag())});
            }
        }
    });
    summary["model"] = e.hamiltonian.model;
    summary["layout"] = layout.describe();
    summary["duration"] = e.duration;
    summary["samples"] = samples.size();
    write_json_file(ctx, "evolve.json", summary);
    log_line(ctx, "evolved " + e.hamiltonian.model + " for " + format_double(e.duration) + " s, " +
                      std::to_string(samples.size()) + " samples");
}

void cmd_steady(const RunContext &ctx) {
    const PhysicalParams &p = require_params(ctx);
    const SteadyConfig sc = ctx.config.steady.value_or(SteadyConfig{});
    SteadyStateOptions options;
    options.damping = sc.damping;
    options.max_iterations = sc.max_iterations;
    const ClassicalState s = classical_steady_state(p, options);
    const StabilityReport report = stability_analysis(p, s);
    json eig = json::array();
    for (int i = 0; i < 4; ++i) {
        eig.push_back(complex_json(report.eigenvalues(i)));
    }
    json m = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j) {
            row.push_back(complex_json(report.matrix_m(i, j)));
        }
        m.push_back(row);
    }
    const double residual = steady_state_residual(p, s);
    write_json_file(ctx, "steady.json",
                    {{"alpha", complex_json(s.alpha)},
                     {"beta", complex_json(s.beta)},
                     {"pump", complex_json(p.pump)},
                     {"residual", residual},
                     {"stability", {{"stable", report.stable}, {"eigenvalues", eig}, {"matrix_m", m}}}});
    log_line(ctx, std::string("steady state ") + (report.stable ? "stable" : "unstable") +
                      ", residual " + format_double(residual));
}

void cmd_protocol(const RunContext &ctx) {
    const ProtocolConfig pc = ctx.config.protocol.value_or(ProtocolConfig{});
    const std::uint64_t seed = ctx.config.seed;
    json doc;
    if (pc.mode == "ideal") {
        const ModeLayout layout = ctx.config.layout ? ctx.config.layout->build() : protocol_layout(pc.n);
        const ProtocolResult r =
            run_noon_ideal(pc.n, layout, pc.sample ? std::optional<std::uint64_t>(seed) : std::nullopt);
        const ProtocolBranch &sel = r.selected();
        json branches = json::array();
        for (const ProtocolBranch &b : r.branches) {
            branches.push_back({{"outcome", b.measurement.outcome},
                                {"probability", b.measurement.probability},
                                {"fidelity", b.fidelity}});
        }
        doc = {{"N", r.n},
               {"mode", "ideal"},
               {"outcome", r.outcome},
               {"probability", sel.measurement.probability},
               {"fidelity", sel.fidelity},
               {"seed", r.seed ? json(*r.seed) : json(nullptr)},
               {"layout", layout.describe()},
               {"branches", branches}};
        write_csv_file(ctx, "state.csv", [&](std::ostream &out) { write_state_csv(out, sel.measurement.post_state); });
    } else {
        const PhysicalParams &p = require_params(ctx);
        PhysicalOptions options;
        if (pc.rabi) {
            options.rabi = *pc.rabi;
        }
        options.lindblad = pc.lindblad;
        options.spontaneous_emission = pc.spontaneous_emission;
        options.counter_rotating_beamsplitter = pc.counter_rotating_beamsplitter;
        StageSchedule schedule = exact_schedule(p, options);
        schedule.beamsplitter_1 *= pc.time_scale;
        schedule.controlled_phase *= pc.time_scale;
        schedule.beamsplitter_2 *= pc.time_scale;
        schedule.swap *= pc.time_scale;
        schedule.rotation *= pc.time_scale;
        const PhysicalProtocolResult r = run_noon_physical(pc.n, p, schedule, options);

        int outcome = kGround;
        if (pc.sample) {
            RandomStream rng(seed);
            double u = rng.uniform();
            double total = 0.0;
            for (const PhysicalBranch &b : r.branches) {
                total += b.probability;
            }
            double acc = 0.0;
            for (const PhysicalBranch &b : r.branches) {
                acc += b.probability / total;
                outcome = b.outcome;
                if (u < acc) {
                    break;
                }
            }
        }
        const PhysicalBranch *sel = nullptr;
        json branches = json::array();
        for (const PhysicalBranch &b : r.branches) {
            if (b.outcome == outcome) {
                sel = &b;
            }
            branches.push_back({{"outcome", b.outcome}, {"probability", b.probability}, {"fidelity", b.fidelity}});
        }
        if (!sel) {
            throw InvalidState("selected ion outcome has no branch");
        }
        doc = {{"N", r.n},
               {"mode", "physical"},
               {"outcome", outcome},
               {"probability", sel->probability},
               {"fidelity", sel->fidelity},
               {"seed", pc.sample ? json(seed) : json(nullptr)},
               {"fidelity_to_ideal", r.fidelity_to_ideal},
               {"min_eigenvalue", r.min_eigenvalue},
               {"max_trace_drift", r.max_trace_drift},
               {"beta_bar", complex_json(r.beta_bar)},
               {"schedule",
                {{"beamsplitter_1", schedule.beamsplitter_1},
                 {"controlled_phase", schedule.controlled_phase},
                 {"beamsplitter_2", schedule.beamsplitter_2},
                 {"swap", schedule.swap},
                 {"rotation", schedule.rotation},
                 {"total", schedule.total()}}},
               {"layout", r.pre_measurement.layout().describe()},
               {"branches", branches}};
        write_csv_file(ctx, "state.csv", [&](std::ostream &out) { write_operator_csv(out, sel->post_state.matrix()); });
    }
    write_json_file(ctx, "protocol.json", doc);
    log_line(ctx, "N=" + std::to_string(pc.n) + " outcome " + std::to_string(doc["outcome"].get<int>()) +
                      " probability " + format_double(doc["probability"].get<double>()) + " fidelity " +
                      format_double(doc["fidelity"].get<double>()));
}

void cmd_fidelity_sweep(const RunContext &ctx) {
    const SweepConfig sc = ctx.config.fidelity_sweep.value_or(SweepConfig{});
    SweepOptions options;
    options.n_min = sc.n_min;
    options.n_max = sc.n_max;
    options.percents = sc.percents;
    options.samples = sc.samples;
    options.seed = ctx.config.seed;
    options.threads = ctx.threads;
    const std::vector<FidelityResult> rows = fidelity_sweep(options);
    write_csv_file(ctx, "fidelity_sweep.csv", [&](std::ostream &out) {
        CsvWriter csv(out, {"N", "percent", "v_lambda", "v_theta", "analytic_abs", "mc_mean_abs", "mc_stderr",
                            "mc_mean_complex_re", "mc_mean_complex_im", "samples", "seed"});
        for (const FidelityResult &r : rows) {
            csv.row({std::to_string(r.n), format_double(r.percent), format_double(r.spec.v_lambda),
                     format_double(r.spec.v_theta), format_double(r.analytic_abs), format_double(r.mc_mean_abs),
                     format_double(r.mc_stderr), format_double(r.mc_mean_complex.real()),
                     format_double(r.mc_mean_complex.imag()), std::to_string(r.samples), std::to_string(r.seed)});
        }
    });
    log_line(ctx, "fidelity sweep: " + std::to_string(rows.size()) + " cells");
}

void cmd_verify_elimination(const RunContext &ctx) {
    const PhysicalParams &base = require_params(ctx);
    const EliminationConfig ec = ctx.config.verify_elimination.value_or(EliminationConfig{});
    CrossKerrCheckOptions options;
    options.cutoff_a = ec.cutoff_a;
    options.cutoff_b2 = ec.cutoff_b2;
    options.samples = ec.samples;
    options.omega_reference = ec.omega_reference;
    const double omega_ref = ec.omega_reference != 0.0 ? ec.omega_reference : base.omega_rabi;
    const ModeLayout layout = make_layout({{Mode::a, ec.cutoff_a}, {Mode::b2, ec.cutoff_b2}}, 2);
    const OperatorMatrix p_ground = level_projector(layout, kGround);
    auto flat = [&](int a, int b2) { return static_cast<Eigen::Index>(layout.flat_index({.a = a, .b2 = b2})); };
    // Coefficient of n_a n_b2 read off the ground-level block.
    auto kerr_coefficient = [&](const CMatrix &m) {
        return (m(flat(1, 1), flat(1, 1)) - m(flat(1, 0), flat(1, 0)) - m(flat(0, 1), flat(0, 1)) +
                m(flat(0, 0), flat(0, 0)))
            .real();
    };

    struct Row {
        CrossKerrCheck check;
        EffectiveHamiltonian projector;
        double relative_residual;
        double g_ck_ratio;
    };
    std::vector<Row> rows;
    for (double ratio : ec.ratios) {
        CrossKerrCheck check = check_cross_kerr_elimination(base, ratio, ec.nu_over_delta2, options);
        PhysicalParams p = base;
        p.delta2 = ratio * std::abs(omega_ref);
        p.nu = ec.nu_over_delta2 * std::abs(p.delta2);
        const HamiltonianSplit split = split_antinode(layout, p);
        EffectiveHamiltonian eff = effective_hamiltonian_projector(split.h0, split.h1, p_ground,
                                                                   ec.projector_periods * kTwoPi / std::abs(p.delta2));
        const double scale = inf_norm(eff.hermitized.matrix());
        const double reference = kerr_coefficient(h_cross_kerr(layout, p).matrix());
        rows.push_back({std::move(check), std::move(eff), 0.0, 0.0});
        Row &r = rows.back();
        r.relative_residual = scale > 0.0 ? r.projector.residual / scale : 0.0;
        r.g_ck_ratio = reference != 0.0 ? kerr_coefficient(r.projector.hermitized.matrix()) / reference
                                        : std::numeric_limits<double>::quiet_NaN();
    }
    write_csv_file(ctx, "elimination.csv", [&](std::ostream &out) {
        CsvWriter csv(out, {"delta2_over_omega", "nu_over_delta2", "t_pi_seconds", "fock_mean_infidelity",
                            "fock_max_infidelity", "superposition_mean_infidelity", "superposition_max_infidelity",
                            "projector_residual", "projector_relative_residual", "g_ck_ratio",
                            "projector_quad_points"});
        for (const Row &r : rows) {
            csv.row({format_double(r.check.delta2_over_omega), format_double(r.check.nu_over_delta2),
                     format_double(r.check.t_pi), format_double(r.check.fock.mean_infidelity),
                     format_double(r.check.fock.max_infidelity), format_double(r.check.superposition.mean_infidelity),
                     format_double(r.check.superposition.max_infidelity), format_double(r.projector.residual),
                     format_double(r.relative_residual), format_double(r.g_ck_ratio),
                     std::to_string(r.projector.quad_points)});
        }
    });
    log_line(ctx, "elimination check: " + std::to_string(rows.size()) + " detuning ratios");
}

void run_command(const RunContext &ctx) {
    write_json_file(ctx, "provenance.json", {{"config", json::parse(ctx.config.canonical)}});
    if (ctx.command == "hamiltonian") {
        cmd_hamiltonian(ctx);
    } else if (ctx.command == "evolve") {
        cmd_evolve(ctx);
    } else if (ctx.command == "steady") {
        cmd_steady(ctx);
    } else if (ctx.command == "protocol") {
        cmd_protocol(ctx);
    } else if (ctx.command == "fidelity-sweep") {
        cmd_fidelity_sweep(ctx);
    } else if (ctx.command == "verify-elimination") {
        cmd_verify_elimination(ctx);
    } else {
        throw ConfigError("unknown command '" + ctx.command + "'");
    }
}

int exit_code_for(const std::exception_ptr &error) {
    if (!error) {
        return kExitOk;
    }
    try {
        std::rethrow_exception(error);
    } catch (const ConfigError &) {
        return kExitConfig;
    } catch (const IoError &) {
        return kExitIo;
    } catch (const IntegrationFailure &) {
        return kExitIntegration;
    } catch (const NoConvergence &) {
        return kExitIntegration;
    } catch (const std::invalid_argument &) {
        return kExitPrecondition;
    } catch (const std::out_of_range &) {
        return kExitPrecondition;
    } catch (const std::domain_error &) {
        return kExitPrecondition;
    } catch (...) {
        return kExitInternal;
    }
}

}  // namespace noonforge::cli
