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


#include "noonforge/params.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "noonforge/errors.h"

namespace noonforge {

double PhysicalParams::g0() const {
    if (delta0 == 0.0) {
        throw InvalidParams("g0 needs a nonzero delta0");
    }
    return eta * omega_rabi * omega_rabi / delta0;
}

double PhysicalParams::g_ck() const {
    if (delta2 == 0.0) {
        throw InvalidParams("g_ck needs a nonzero delta2");
    }
    return 2.0 * eta * eta * omega_rabi * omega_rabi / delta2;
}

void PhysicalParams::validate() const {
    const double values[] = {nu,  delta0, delta1,    delta2,       omega_rabi, eta,
                             phi, gamma,  gamma_motion, gamma_e, pump.real(), pump.imag()};
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw InvalidParams("physical parameters must be finite");
        }
    }
    if (nu <= 0.0) {
        throw InvalidParams("nu must be positive");
    }
    if (eta < 0.0) {
        throw InvalidParams("eta must be non-negative");
    }
    if (gamma < 0.0 || gamma_motion < 0.0 || gamma_e < 0.0) {
        throw InvalidParams("decay rates must be non-negative");
    }
}

PhysicalParams paper_feasibility_preset() {
    PhysicalParams p;
    p.gamma = kTwoPi * 10.0;
    p.omega_rabi = kTwoPi * 50e3;
    p.delta2 = 10.0 * p.omega_rabi;
    p.nu = 10.0 * p.delta2;
    p.delta0 = 10.0 * p.nu;
    p.delta1 = p.nu;
    p.eta = 0.1;
    p.phi = kPi / 4.0;
    // beta ~ E / nu, so |E| = nu * sqrt(1000) gives ~1000 photons. The
    // imaginary pump puts beta on the positive imaginary axis, which is the
    // phase the beam-splitter gate convention expects.
    p.pump = {0.0, p.nu * std::sqrt(1000.0)};
    p.gamma_motion = kTwoPi * 1.0;
    p.gamma_e = 0.0;
    return p;
}

PhysicalParams preset_by_name(std::string_view name) {
    if (name == "paper-feasibility") {
        return paper_feasibility_preset();
    }
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_number(std::string_view s, std::string_view original) {
    s = trim(s);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
        throw std::invalid_argument("malformed frequency '" + std::string(original) + "'");
    }
    return value;
}

}  // namespace

double parse_angular_frequency(std::string_view text) {
    std::string_view s = trim(text);
    if (s.size() >= 3 && (s[0] == '2') && (s[1] == 'p' || s[1] == 'P') && (s[2] == 'i' || s[2] == 'I')) {
        std::string_view rest = trim(s.substr(3));
        if (rest.empty() || rest.front() != '*') {
            throw std::invalid_argument("malformed frequency '" + std::string(text) + "', expected 2pi*<Hz>");
        }
        return kTwoPi * parse_number(rest.substr(1), text);
    }
    return parse_number(s, text);
}

}  // namespace noonforge
