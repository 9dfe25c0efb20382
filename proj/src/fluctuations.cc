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


#include "noonforge/fluctuations.h"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "noonforge/params.h"
#include "noonforge/random.h"

namespace noonforge {

using Complex = std::complex<double>;

namespace {

void check_variance(double v) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument("variance must be finite and >= 0");
    }
}

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// e^{i pi m / 4} for integer m, without trigonometric rounding.
Complex eighth_root(int m) {
    static const double h = std::sqrt(0.5);
    static const Complex table[8] = {{1, 0}, {h, h}, {0, 1}, {-h, h}, {-1, 0}, {-h, -h}, {0, -1}, {h, -h}};
    return table[((m % 8) + 8) % 8];
}

// (-i)^k = 1 / i^k
Complex inverse_i_power(int k) {
    static const Complex table[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    return table[k % 4];
}

// Neumaier compensated sum, applied to real and imaginary parts.
class CompensatedSum {
   public:
    void add(Complex x) {
        add_part(x.real(), sum_re_, c_re_);
        add_part(x.imag(), sum_im_, c_im_);
    }
    Complex value() const { return {sum_re_ + c_re_, sum_im_ + c_im_}; }

   private:
    static void add_part(double x, double &sum, double &c) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            c += (sum - t) + x;
        } else {
            c += (x - t) + sum;
        }
        sum = t;
    }
    double sum_re_ = 0.0, c_re_ = 0.0, sum_im_ = 0.0, c_im_ = 0.0;
};

}  // namespace

FluctuationSpec FluctuationSpec::from_percent(double percent) {
    if (!(percent >= 0.0) || !std::isfinite(percent)) {
        throw std::invalid_argument("percent must be finite and >= 0");
    }
    const double s = 1e-2 * percent * kPi;
    return {(s / 4.0) * (s / 4.0), s * s};
}

void FluctuationSpec::validate() const {
    check_variance(v_lambda);
    check_variance(v_theta);
}

double gaussian_moment(int n, double v) {
    if (n < 0) {
        throw std::invalid_argument("moment order must be >= 0");
    }
    check_variance(v);
    if (n % 2 == 1) {
        return 0.0;
    }
    double m = 1.0;
    for (int k = n - 1; k > 0; k -= 2) {
        m *= k * v;
    }
    return m;
}

double avg_exp(int n, double v) {
    check_variance(v);
    return std::exp(-static_cast<double>(n) * n * v / 2.0);
}

Complex avg_sin_cos(int n, int m, double v) {
    if (n < 0 || m < 0) {
        throw std::invalid_argument("powers must be >= 0");
    }
    check_variance(v);
    CompensatedSum sum;
    const double log_norm = (n + m) * std::log(2.0);
    for (int l = 0; l <= n; ++l) {
        for (int lp = 0; lp <= m; ++lp) {
            const int q = n + m - 2 * l - 2 * lp;
            double mag = std::exp(log_binomial(n, l) + log_binomial(m, lp) - log_norm - q * static_cast<double>(q) * v / 2.0);
            double sign = l % 2 == 0 ? 1.0 : -1.0;
            sum.add(sign * mag * eighth_root(q));
        }
    }
    return inverse_i_power(n) * sum.value();
}

Complex analytic_avg_overlap(int n, const FluctuationSpec &spec) {
    if (n < 0) {
        throw std::invalid_argument("N must be >= 0");
    }
    spec.validate();
    // The terms reach 2^(N/2) in size while the sum is O(1), so they are
    // formed and accumulated in extended precision.
    using Wide = long double;
    const Wide h = std::sqrt(Wide(0.5));
    const Wide root_re[8] = {1, h, 0, -h, -1, -h, 0, h};
    const Wide root_im[8] = {0, h, 1, h, 0, -h, -1, -h};
    auto log_binomial_wide = [](int a, int b) {
        return std::lgamma(Wide(a + 1)) - std::lgamma(Wide(b + 1)) - std::lgamma(Wide(a - b + 1));
    };
    const Wide log_norm = (1 + Wide(1.5) * n) * std::log(Wide(2));
    const Wide vl = spec.v_lambda, vt = spec.v_theta;
    Wide sum_re = 0, c_re = 0, sum_im = 0, c_im = 0;
    auto add = [](Wide x, Wide &sum, Wide &c) {
        Wide t = sum + x;
        c += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    };
    for (int k = 0; k <= n; ++k) {
        const Wide theta_factor = 1 + std::exp(-Wide(k) * k * vt / 2);
        const Wide log_nk = log_binomial_wide(n, k) - log_norm;
        for (int l = 0; l <= k; ++l) {
            for (int lp = 0; lp <= n - k; ++lp) {
                const int q = n - 2 * l - 2 * lp;
                Wide mag = std::exp(log_nk + log_binomial_wide(k, l) + log_binomial_wide(n - k, lp) -
                                    Wide(q) * q * vl / 2) *
                           theta_factor * (l % 2 == 0 ? 1 : -1);
                // Multiply by (-i)^k e^{i pi q / 4} = e^{i pi (q - 2k) / 4}.
                const int idx = (((q - 2 * k) % 8) + 8) % 8;
                add(mag * root_re[idx], sum_re, c_re);
                add(mag * root_im[idx], sum_im, c_im);
            }
        }
    }
    return {static_cast<double>(sum_re + c_re), static_cast<double>(sum_im + c_im)};
}

namespace {

// C(N,k) / (2 * 2^(N/2)) for k = 0..N.
std::vector<double> overlap_coefficients(int n) {
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        c[static_cast<std::size_t>(k)] = std::exp(log_binomial(n, k) - (1.0 + 0.5 * n) * std::log(2.0));
    }
    return c;
}

Complex overlap_with(const std::vector<double> &coeff, int n, double d_lambda, double d_theta) {
    const double lambda = kPi / 4.0 + d_lambda;
    const double s = std::sin(lambda), c = std::cos(lambda);
    // Horner-like accumulation of sum_k coeff_k (1 + e^{i k dt}) s^k c^(N-k).
    Complex total = 0.0;
    double s_pow = 1.0;
    std::vector<double> c_pow(static_cast<std::size_t>(n) + 1);
    c_pow[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        c_pow[static_cast<std::size_t>(k)] = c_pow[static_cast<std::size_t>(k) - 1] * c;
    }
    const Complex step = std::exp(Complex(0.0, d_theta));
    Complex rot = 1.0;
    for (int k = 0; k <= n; ++k) {
        total += coeff[static_cast<std::size_t>(k)] * s_pow * c_pow[static_cast<std::size_t>(n - k)] * (1.0 + rot);
        s_pow *= s;
        rot *= step;
    }
    return total;
}

}  // namespace

Complex sample_overlap(int n, double d_lambda, double d_theta) {
    if (n < 0) {
        throw std::invalid_argument("N must be >= 0");
    }
    return overlap_with(overlap_coefficients(n), n, d_lambda, d_theta);
}

FidelityResult mc_fidelity(int n, const FluctuationSpec &spec, long samples, std::uint64_t seed) {
    if (samples < 1) {
        throw std::invalid_argument("samples must be >= 1");
    }
    if (n < 0) {
        throw std::invalid_argument("N must be >= 0");
    }
    spec.validate();
    const std::vector<double> coeff = overlap_coefficients(n);
    const double sl = std::sqrt(spec.v_lambda), st = std::sqrt(spec.v_theta);
    const CounterRng rng(seed);
    // Welford accumulators for |z|, Re z, Im z.
    double mean_abs = 0.0, m2_abs = 0.0, mean_re = 0.0, m2_re = 0.0, mean_im = 0.0, m2_im = 0.0;
    for (long i = 0; i < samples; ++i) {
        auto [z0, z1] = rng.normals(static_cast<std::uint64_t>(i));
        Complex z = overlap_with(coeff, n, sl * z0, st * z1);
        const double k = static_cast<double>(i + 1);
        auto update = [k](double x, double &mean, double &m2) {
            double d = x - mean;
            mean += d / k;
            m2 += d * (x - mean);
        };
        update(std::abs(z), mean_abs, m2_abs);
        update(z.real(), mean_re, m2_re);
        update(z.imag(), mean_im, m2_im);
    }
    FidelityResult r;
    r.n = n;
    r.percent = std::numeric_limits<double>::quiet_NaN();
    r.spec = spec;
    r.analytic = analytic_avg_overlap(n, spec);
    r.analytic_abs = std::abs(r.analytic);
    r.mc_mean_abs = mean_abs;
    r.mc_mean_complex = {mean_re, mean_im};
    const double ns = static_cast<double>(samples);
    if (samples > 1) {
        r.mc_stderr = std::sqrt(m2_abs / (ns - 1.0) / ns);
        r.mc_complex_stderr = std::sqrt((m2_re + m2_im) / (ns - 1.0) / ns);
    }
    r.samples = samples;
    r.seed = seed;
    return r;
}

std::vector<FidelityResult> fidelity_sweep(const SweepOptions &options) {
    if (options.n_min < 0 || options.n_max < options.n_min) {
        throw std::invalid_argument("sweep needs 0 <= n_min <= n_max");
    }
    if (options.percents.empty()) {
        throw std::invalid_argument("sweep needs at least one percent value");
    }
    for (double p : options.percents) {
        FluctuationSpec::from_percent(p);
    }
    struct Cell {
        int n;
        double percent;
    };
    std::vector<Cell> cells;
    for (int n = options.n_min; n <= options.n_max; ++n) {
        for (double p : options.percents) {
            cells.push_back({n, p});
        }
    }
    std::vector<FidelityResult> rows(cells.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                const Cell &c = cells[i];
                FidelityResult r = mc_fidelity(c.n, FluctuationSpec::from_percent(c.percent), options.samples,
                                               cell_seed(options.seed, c.n, c.percent));
                r.percent = c.percent;
                rows[i] = r;
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failure = std::current_exception();
            }
        }
    };
    const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(cells.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return rows;
}

std::vector<FidelityResult> fidelity_sweep(int n_max, const std::vector<double> &percents, long samples,
                                           std::uint64_t seed) {
    SweepOptions o;
    o.n_max = n_max;
    o.percents = percents;
    o.samples = samples;
    o.seed = seed;
    return fidelity_sweep(o);
}

}  // namespace noonforge
