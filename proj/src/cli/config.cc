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


#include "noonforge/cli/config.h"

#include <climits>
#include <cmath>
#include <cstdio>
#include <limits>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace noonforge::cli {

using nlohmann::json;

namespace {

std::string type_name(const json &j) { return j.type_name(); }

// Reads the members of one JSON object and rejects anything left over.
class ObjectReader {
   public:
    ObjectReader(const json &j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) {
            throw ConfigError(where() + ": expected an object, got " + type_name(j_));
        }
    }

    bool has(const std::string &key) const { return j_.contains(key); }

    const json *get(const std::string &key) {
        seen_.insert(key);
        auto it = j_.find(key);
        return it == j_.end() ? nullptr : &*it;
    }

    std::string child(const std::string &key) const { return path_.empty() ? key : path_ + "." + key; }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (!seen_.count(it.key())) {
                throw ConfigError("unknown key '" + child(it.key()) + "'");
            }
        }
    }

    template <class Fn>
    void with(const std::string &key, Fn fn) {
        if (const json *v = get(key)) {
            fn(*v, child(key));
        }
    }

   private:
    std::string where() const { return path_.empty() ? "config" : "'" + path_ + "'"; }
    const json &j_;
    std::string path_;
    std::set<std::string> seen_;
};

double as_number(const json &j, const std::string &path) {
    if (!j.is_number()) {
        throw ConfigError("'" + path + "': expected a number, got " + type_name(j));
    }
    double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw ConfigError("'" + path + "': value must be finite");
    }
    return v;
}

double as_frequency(const json &j, const std::string &path) {
    if (j.is_string()) {
        try {
            return parse_angular_frequency(j.get<std::string>());
        } catch (const std::invalid_argument &e) {
            throw ConfigError("'" + path + "': " + e.what());
        }
    }
    return as_number(j, path);
}

Complex as_complex(const json &j, const std::string &path) {
    if (j.is_array()) {
        if (j.size() != 2) {
            throw ConfigError("'" + path + "': expected [re, im]");
        }
        return {as_frequency(j[0], path + "[0]"), as_frequency(j[1], path + "[1]")};
    }
    return {as_frequency(j, path), 0.0};
}

bool as_bool(const json &j, const std::string &path) {
    if (!j.is_boolean()) {
        throw ConfigError("'" + path + "': expected true or false, got " + type_name(j));
    }
    return j.get<bool>();
}

long long as_integer(const json &j, const std::string &path, long long min_value) {
    if (!j.is_number_integer()) {
        throw ConfigError("'" + path + "': expected an integer, got " + type_name(j));
    }
    if (j.is_number_unsigned() && j.get<unsigned long long>() > static_cast<unsigned long long>(LLONG_MAX)) {
        throw ConfigError("'" + path + "': integer out of range");
    }
    long long v = j.get<long long>();
    if (v < min_value) {
        throw ConfigError("'" + path + "': must be >= " + std::to_string(min_value));
    }
    return v;
}

int as_int(const json &j, const std::string &path, int min_value) {
    long long v = as_integer(j, path, min_value);
    if (v > std::numeric_limits<int>::max()) {
        throw ConfigError("'" + path + "': integer out of range");
    }
    return static_cast<int>(v);
}

std::string as_string(const json &j, const std::string &path, std::initializer_list<const char *> allowed) {
    if (!j.is_string()) {
        throw ConfigError("'" + path + "': expected a string, got " + type_name(j));
    }
    std::string s = j.get<std::string>();
    if (allowed.size() == 0) {
        return s;
    }
    std::string options;
    for (const char *a : allowed) {
        if (s == a) {
            return s;
        }
        options += (options.empty() ? "" : ", ") + std::string(a);
    }
    throw ConfigError("'" + path + "': '" + s + "' is not one of " + options);
}

std::vector<double> as_number_list(const json &j, const std::string &path) {
    if (!j.is_array() || j.empty()) {
        throw ConfigError("'" + path + "': expected a non-empty array of numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(as_number(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

void read_params(const json &j, const std::string &path, PhysicalParams &p) {
    ObjectReader r(j, path);
    auto freq = [&](const char *key, double &field) {
        r.with(key, [&](const json &v, const std::string &at) { field = as_frequency(v, at); });
    };
    freq("nu", p.nu);
    freq("delta0", p.delta0);
    freq("delta1", p.delta1);
    freq("delta2", p.delta2);
    freq("omega_rabi", p.omega_rabi);
    freq("gamma", p.gamma);
    freq("gamma_motion", p.gamma_motion);
    freq("gamma_e", p.gamma_e);
    r.with("eta", [&](const json &v, const std::string &at) { p.eta = as_number(v, at); });
    r.with("phi", [&](const json &v, const std::string &at) { p.phi = as_number(v, at); });
    r.with("pump", [&](const json &v, const std::string &at) { p.pump = as_complex(v, at); });
    r.finish();
}

LayoutConfig read_layout(const json &j, const std::string &path) {
    ObjectReader r(j, path);
    LayoutConfig out;
    r.with("cutoffs", [&](const json &v, const std::string &at) {
        ObjectReader c(v, at);
        for (Mode m : kAllModes) {
            std::string name(mode_name(m));
            c.with(name, [&](const json &x, const std::string &xat) { out.cutoffs.push_back({m, as_int(x, xat, 1)}); });
        }
        c.finish();
    });
    r.with("ion_levels", [&](const json &v, const std::string &at) { out.ion_levels = as_int(v, at, 1); });
    r.finish();
    if (out.ion_levels > 3) {
        throw ConfigError("'" + r.child("ion_levels") + "': at most 3 levels");
    }
    return out;
}

void read_hamiltonian_fields(ObjectReader &r, HamiltonianConfig &h) {
    r.with("model", [&](const json &v, const std::string &at) {
        h.model = as_string(v, at, {"full_pumped", "optomech", "linearized", "beamsplitter", "antinode", "cross_kerr",
                                    "jc", "rabi"});
    });
    r.with("keep_cavity_shift", [&](const json &v, const std::string &at) { h.keep_cavity_shift = as_bool(v, at); });
    r.with("keep_cubic", [&](const json &v, const std::string &at) { h.keep_cubic = as_bool(v, at); });
    r.with("beta_bar", [&](const json &v, const std::string &at) { h.beta_bar = as_complex(v, at); });
    r.with("alpha_bar", [&](const json &v, const std::string &at) { h.alpha_bar = as_complex(v, at); });
    r.with("rabi", [&](const json &v, const std::string &at) { h.rabi = as_complex(v, at); });
}

HamiltonianConfig read_hamiltonian(const json &j, const std::string &path) {
    ObjectReader r(j, path);
    HamiltonianConfig h;
    read_hamiltonian_fields(r, h);
    r.with("eigenvalues", [&](const json &v, const std::string &at) { h.eigenvalues = as_int(v, at, 0); });
    r.with("dump_matrix", [&](const json &v, const std::string &at) { h.dump_matrix = as_bool(v, at); });
    r.finish();
    return h;
}

EvolveConfig read_evolve(const json &j, const std::string &path) {
    ObjectReader r(j, path);
    EvolveConfig e;
    r.with("hamiltonian", [&](const json &v, const std::string &at) {
        ObjectReader h(v, at);
        read_hamiltonian_fields(h, e.hamiltonian);
        h.finish();
    });
    r.with("initial", [&](const json &v, const std::string &at) {
        ObjectReader c(v, at);
        c.with("a", [&](const json &x, const std::string &xat) { e.initial.a = as_int(x, xat, 0); });
        c.with("b1", [&](const json &x, const std::string &xat) { e.initial.b1 = as_int(x, xat, 0); });
        c.with("b2", [&](const json &x, const std::string &xat) { e.initial.b2 = as_int(x, xat, 0); });
        c.with("level", [&](const json &x, const std::string &xat) { e.initial.level = as_int(x, xat, 0); });
        c.finish();
    });
    r.with("duration", [&](const json &v, const std::string &at) {
        e.duration = as_number(v, at);
        if (e.duration < 0.0) {
            throw ConfigError("'" + at + "': must be >= 0");
        }
    });
    r.with("samples", [&](const json &v, const std::string &at) { e.samples = as_int(v, at, 2); });
    r.with("lindblad", [&](const json &v, const std::string &at) { e.lindblad = as_bool(v, at); });
    r.with("spontaneous_emission",
           [&](const json &v, const std::string &at) { e.spontaneous_emission = as_bool(v, at); });
    r.with("step_control",
           [&](const json &v, const std::string &at) { e.step_control = as_string(v, at, {"adaptive", "fixed"}); });
    r.with("fixed_steps", [&](const json &v, const std::string &at) { e.fixed_steps = as_int(v, at, 1); });
    r.with("abs_tol", [&](const json &v, const std::string &at) { e.abs_tol = as_number(v, at); });
    r.with("rel_tol", [&](const json &v, const std::string &at) { e.rel_tol = as_number(v, at); });
    r.with("observables", [&](const json &v, const std::string &at) {
        if (!v.is_array()) {
            throw ConfigError("'" + at + "': expected an array of names");
        }
        e.observables.clear();
        for (std::size_t i = 0; i < v.size(); ++i) {
            e.observables.push_back(as_string(v[i], at + "[" + std::to_string(i) + "]",
                                              {"n_a", "n_b1", "n_b2", "x", "p_g", "p_e1", "p_e2"}));
        }
    });
    r.finish();
    return e;
}

SteadyConfig read_steady(const json &j, const std::string &path) {
    ObjectReader r(j, path);
    SteadyConfig s;
    r.with("damping", [&](const json &v, const std::string &at) { s.damping = as_number(v, at); });
    r.with("max_iterations", [&](const json &v, const std::string &at) { s.max_iterations = as_int(v, at, 1); });
    r.finish();
    return s;
}

ProtocolConfig read_protocol(const json &j, const std::string &path) {
    ObjectReader r(j, path);
    ProtocolConfig p;
    r.with("n", [&](const json &v, const std::string &at) { p.n = as_int(v, at, 0); });
    r.with("mode", [&](const json &v, const std::string &at) { p.mode = as_string(v, at, {"ideal", "physical"}); });
    r.with("sample", [&](const json &v, const std::string &at) { p.sample = as_bool(v, at); });
    r.with("lindblad", [&](const json &v, const std::string &at) { p.lindblad = as_bool(v, at); });
    r.with("spontaneous_emission",
           [&](const json &v, const std::string &at) { p.spontaneous_emission = as_bool(v, at); });
    r.with("counter_rotating_beamsplitter",
           [&](const json &v, const std::string &at) { p.counter_rotating_beamsplitter = as_bool(v, at); });
    r.with("rabi", [&](const json &v, const std::string &at) { p.rabi = as_frequency(v, at); });
    r.with("time_scale", [&](const json &v, const std::string &at) {
        p.time_scale = as_number(v, at);
        if (p.time_scale < 0.0) {
            throw ConfigError("'" + at + "': must be >= 0");
        }
    });
    r.finish();
    return p;
}

SweepConfig read_sweep(const json &j, const std::string &path) {
    ObjectReader r(j, path);
    SweepConfig s;
    r.with("n_min", [&](const json &v, const std::string &at) { s.n_min = as_int(v, at, 0); });
    r.with("n_max", [&](const json &v, const std::string &at) { s.n_max = as_int(v, at, 0); });
    r.with("percents", [&](const json &v, const std::string &at) { s.percents = as_number_list(v, at); });
    r.with("samples", [&](const json &v, const std::string &at) { s.samples = as_integer(v, at, 1); });
    r.finish();
    if (s.n_max < s.n_min) {
        throw ConfigError("'" + r.child("n_max") + "': must be >= n_min");
    }
    return s;
}

EliminationConfig read_elimination(const json &j, const std::string &path) {
    ObjectReader r(j, path);
    EliminationConfig e;
    r.with("ratios", [&](const json &v, const std::string &at) { e.ratios = as_number_list(v, at); });
    r.with("nu_over_delta2", [&](const json &v, const std::string &at) { e.nu_over_delta2 = as_number(v, at); });
    r.with("cutoff_a", [&](const json &v, const std::string &at) { e.cutoff_a = as_int(v, at, 2); });
    r.with("cutoff_b2", [&](const json &v, const std::string &at) { e.cutoff_b2 = as_int(v, at, 2); });
    r.with("samples", [&](const json &v, const std::string &at) { e.samples = as_int(v, at, 1); });
    r.with("omega_reference",
           [&](const json &v, const std::string &at) { e.omega_reference = as_frequency(v, at); });
    r.with("projector_periods",
           [&](const json &v, const std::string &at) { e.projector_periods = as_number(v, at); });
    r.finish();
    return e;
}

}  // namespace

std::string fnv1a_hex(const std::string &text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

RunConfig parse_config(const std::string &text, const std::optional<std::string> &preset_override,
                       const std::optional<std::uint64_t> &seed_override) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        // The parser message already carries the line and column.
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (preset_override) {
        doc["preset"] = *preset_override;
    }
    if (seed_override) {
        doc["seed"] = *seed_override;
    }

    RunConfig cfg;
    ObjectReader r(doc, "");
    r.with("preset", [&](const json &v, const std::string &at) {
        cfg.preset = as_string(v, at, {});
        try {
            cfg.params = preset_by_name(*cfg.preset);
        } catch (const std::invalid_argument &e) {
            throw ConfigError("'" + at + "': " + e.what());
        }
    });
    r.with("params", [&](const json &v, const std::string &at) {
        read_params(v, at, cfg.params);
        cfg.has_params = true;
    });
    r.with("layout", [&](const json &v, const std::string &at) { cfg.layout = read_layout(v, at); });
    r.with("seed", [&](const json &v, const std::string &at) {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
            throw ConfigError("'" + at + "': expected a non-negative integer");
        }
        cfg.seed = v.get<std::uint64_t>();
    });
    r.with("hamiltonian", [&](const json &v, const std::string &at) { cfg.hamiltonian = read_hamiltonian(v, at); });
    r.with("evolve", [&](const json &v, const std::string &at) { cfg.evolve = read_evolve(v, at); });
    r.with("steady", [&](const json &v, const std::string &at) { cfg.steady = read_steady(v, at); });
    r.with("protocol", [&](const json &v, const std::string &at) { cfg.protocol = read_protocol(v, at); });
    r.with("fidelity_sweep", [&](const json &v, const std::string &at) { cfg.fidelity_sweep = read_sweep(v, at); });
    r.with("verify_elimination",
           [&](const json &v, const std::string &at) { cfg.verify_elimination = read_elimination(v, at); });
    r.finish();
    cfg.canonical = doc.dump();
    return cfg;
}

RunConfig load_config(const std::string &path, const std::optional<std::string> &preset_override,
                      const std::optional<std::uint64_t> &seed_override) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_config(ss.str(), preset_override, seed_override);
    } catch (const ConfigError &e) {
        throw ConfigError(path + ": " + e.what());
    }
}

}  // namespace noonforge::cli
