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


// Batch commands behind the noonforge executable. Each command reads a
// RunConfig, writes its outputs into a directory and returns normally or
// throws; exit_code_for maps the exception to a process exit status.

#ifndef NOONFORGE_CLI_COMMANDS_H
#define NOONFORGE_CLI_COMMANDS_H

#include <exception>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "noonforge/cli/config.h"

namespace noonforge::cli {

inline constexpr const char *kVersion = "0.1.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitConfig = 2,        ///< unreadable or invalid config, bad flags
    kExitPrecondition = 3,  ///< invalid parameters, layout or state
    kExitIntegration = 4,   ///< ODE or solver failure
    kExitIo = 5,            ///< output could not be written
};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct RunContext {
    RunConfig config;
    std::string command;
    std::filesystem::path out_dir = ".";
    int threads = 1;
    std::ostream *log = nullptr;  ///< human-readable summary; may be null
};

/// Lines prepended to every CSV output, each starting with "# ".
std::vector<std::string> provenance_lines(const RunContext &ctx);

void cmd_hamiltonian(const RunContext &ctx);
void cmd_evolve(const RunContext &ctx);
void cmd_steady(const RunContext &ctx);
void cmd_protocol(const RunContext &ctx);
void cmd_fidelity_sweep(const RunContext &ctx);
void cmd_verify_elimination(const RunContext &ctx);

/// Dispatches on ctx.command. Throws ConfigError for an unknown name.
void run_command(const RunContext &ctx);

int exit_code_for(const std::exception_ptr &error);

}  // namespace noonforge::cli

#endif
