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

#ifndef NOONFORGE_ERRORS_H
#define NOONFORGE_ERRORS_H

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace noonforge {

// Bad arguments use std::invalid_argument and std::out_of_range directly.
// The types below cover the remaining failure categories.

/// A physical parameter set that cannot produce the requested object
/// (zero detuning in a denominator, a violated resonance condition, ...).
class InvalidParams : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A state or density operator that is not physical within tolerance.
class InvalidState : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// An ODE integration that could not reach its end time.
class IntegrationFailure : public std::runtime_error {
   public:
    IntegrationFailure(const std::string &what, double t_reached)
        : std::runtime_error(what), t_reached_(t_reached) {}
    double t_reached() const { return t_reached_; }

   private:
    double t_reached_;
};

/// An iterative solver that ran out of iterations. Carries the last iterate.
class NoConvergence : public std::runtime_error {
   public:
    NoConvergence(const std::string &what, std::vector<std::complex<double>> last_iterate)
        : std::runtime_error(what), last_iterate_(std::move(last_iterate)) {}
    const std::vector<std::complex<double>> &last_iterate() const { return last_iterate_; }

   private:
    std::vector<std::complex<double>> last_iterate_;
};

/// Non-fatal diagnostics (truncation leakage, loose preconditions) go
/// through a process-wide handler. The default writes to stderr.
using WarningHandler = std::function<void(std::string_view)>;
void set_warning_handler(WarningHandler handler);
void warn(std::string_view message);

}  // namespace noonforge

#endif
