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


// noonforge: batch front end. One subcommand per run, configured by a
// single JSON file.

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "noonforge/cli/commands.h"
#include "noonforge/cli/config.h"

namespace {

int default_threads() {
    if (const char *env = std::getenv("NOONFORGE_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n >= 1) {
                return n;
            }
        } catch (const std::exception &) {
        }
        std::cerr << "warning: ignoring invalid NOONFORGE_THREADS='" << env << "'\n";
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int main(int argc, char **argv) {
    namespace cli = noonforge::cli;
    CLI::App app{"Simulation of hybrid ion-cavity N00N-state generation"};
    app.set_version_flag("--version", std::string(cli::kVersion));
    app.require_subcommand(1, 1);

    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<std::string> preset;
    std::optional<int> threads;

    const char *commands[][2] = {
        {"hamiltonian", "Build a Hamiltonian and write its matrix and lowest eigenvalues"},
        {"evolve", "Integrate unitary or Lindblad dynamics and write a trajectory"},
        {"steady", "Solve the mean-field steady state and its stability"},
        {"protocol", "Run the N00N protocol (ideal gates or physical stages)"},
        {"fidelity-sweep", "Average N00N fidelity under beam-splitter and phase noise"},
        {"verify-elimination", "Compare the antinode model with its cross-Kerr reduction"},
    };
    for (const auto &c : commands) {
        CLI::App *sub = app.add_subcommand(c[0], c[1]);
        sub->add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
        sub->add_option("--out", out_dir, "Output directory (created if missing)");
        sub->add_option("--seed", seed, "Overrides the config seed");
        sub->add_option("--threads", threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);
        sub->add_option("--preset", preset, "Parameter preset, e.g. paper-feasibility");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return cli::kExitConfig;
    }

    cli::RunContext ctx;
    ctx.command = app.get_subcommands().front()->get_name();
    ctx.out_dir = out_dir;
    ctx.threads = threads.value_or(default_threads());
    ctx.log = &std::cout;
    std::exception_ptr error;
    try {
        ctx.config = config_path.empty() ? cli::parse_config("{}", preset, seed)
                                         : cli::load_config(config_path, preset, seed);
        cli::run_command(ctx);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        error = std::current_exception();
    } catch (...) {
        std::cerr << "error: unknown failure\n";
        error = std::current_exception();
    }
    return cli::exit_code_for(error);
}
