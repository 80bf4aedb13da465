// Copyright 2026 The wpipol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wpipol/polarimeter.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "wpipol/errors.h"
#include "wpipol/rng.h"

namespace wpipol {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap(double angle, double period) {
    double r = std::fmod(angle, period);
    if (r < 0.0) {
        r += period;
    }
    // fmod of a value a hair below a multiple of the period can round up to it.
    return r >= period ? 0.0 : r;
}

// Click probability is 1/2 (1 + s . n) with s the normalized Stokes vector and
// n this design row.
std::array<double, 3> design_row(const AnalyzerSetting &s) {
    const double c2 = std::cos(2.0 * s.theta());
    const double s2 = std::sin(2.0 * s.theta());
    return {c2, s2 * std::cos(s.delta()), s2 * std::sin(s.delta())};
}

bool is_default_set(std::span<const AnalyzerSetting> settings) {
    const std::vector<AnalyzerSetting> hvdr = default_settings();
    return std::equal(settings.begin(), settings.end(), hvdr.begin(), hvdr.end());
}

// Solves the 3x3 system a x = b by Cramer's rule; returns false when singular.
bool solve3(const std::array<std::array<double, 3>, 3> &a, const std::array<double, 3> &b,
            std::array<double, 3> &x) {
    auto det3 = [](const std::array<std::array<double, 3>, 3> &m) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    const double d = det3(a);
    if (std::abs(d) < 1e-9) {
        return false;
    }
    for (int col = 0; col < 3; ++col) {
        auto m = a;
        for (int row = 0; row < 3; ++row) {
            m[row][col] = b[row];
        }
        x[col] = det3(m) / d;
    }
    return true;
}

// Linear estimator: s_j = offset_j + sum_k weight[j][k] * p_k, for j = 1..3.
struct StokesEstimator {
    std::vector<std::array<double, 3>> weights;  // per setting, d s / d p_k
    std::array<double, 3> offset{};
    // s0 = p_k + p_l for a complementary pair (k, l), or 1.
    int s0_first = -1;
    int s0_second = -1;
};

StokesEstimator make_estimator(std::span<const AnalyzerSetting> settings) {
    StokesEstimator est;
    const std::size_t n = settings.size();
    est.weights.assign(n, {0.0, 0.0, 0.0});

    if (is_default_set(settings)) {
        // s1 = pH - pV, s2 = 2 pD - 1, s3 = 2 pR - 1.
        est.weights[0] = {1.0, 0.0, 0.0};
        est.weights[1] = {-1.0, 0.0, 0.0};
        est.weights[2] = {0.0, 2.0, 0.0};
        est.weights[3] = {0.0, 0.0, 2.0};
        est.offset = {0.0, -1.0, -1.0};
        est.s0_first = 0;
        est.s0_second = 1;
        return est;
    }

    if (n < 3) {
        throw RangeError("analyzer settings are informationally complete", static_cast<double>(n));
    }

    // Least squares for 2 p_k - 1 = n_k . s.
    std::array<std::array<double, 3>, 3> normal{};
    std::vector<std::array<double, 3>> rows(n);
    for (std::size_t k = 0; k < n; ++k) {
        rows[k] = design_row(settings[k]);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                normal[i][j] += rows[k][i] * rows[k][j];
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        // Column k of (N^T N)^-1 N^T, times 2 for the p -> 2p - 1 map.
        std::array<double, 3> col{};
        if (!solve3(normal, rows[k], col)) {
            throw RangeError("analyzer settings are informationally complete", static_cast<double>(n));
        }
        for (int j = 0; j < 3; ++j) {
            est.weights[k][j] = 2.0 * col[j];
            est.offset[j] -= col[j];
        }
    }
    for (std::size_t k = 0; k < n && est.s0_first < 0; ++k) {
        const AnalyzerSetting comp = settings[k].complement();
        for (std::size_t l = 0; l < n; ++l) {
            if (l != k && std::abs(settings[l].theta() - comp.theta()) < 1e-12 &&
                std::abs(settings[l].delta() - comp.delta()) < 1e-12) {
                est.s0_first = static_cast<int>(k);
                est.s0_second = static_cast<int>(l);
                break;
            }
        }
    }
    return est;
}

}  // namespace

AnalyzerSetting::AnalyzerSetting(double theta, double delta) : theta_(theta), delta_(delta) {
    if (!(theta >= 0.0 && theta < kPi)) {
        throw RangeError("0 <= theta < pi", theta);
    }
    if (!(delta >= 0.0 && delta < 2.0 * kPi)) {
        throw RangeError("0 <= delta < 2 pi", delta);
    }
}

AnalyzerSetting AnalyzerSetting::wrapped(double theta, double delta) {
    if (!std::isfinite(theta) || !std::isfinite(delta)) {
        throw RangeError("finite analyzer angles", std::isfinite(theta) ? delta : theta);
    }
    // theta -> theta - pi only flips the sign of |e>.
    return AnalyzerSetting(wrap(theta, kPi), wrap(delta, 2.0 * kPi));
}

AnalyzerSetting AnalyzerSetting::horizontal() {
    return {0.0, 0.0};
}
AnalyzerSetting AnalyzerSetting::vertical() {
    return {kPi / 2.0, 0.0};
}
AnalyzerSetting AnalyzerSetting::diagonal() {
    return {kPi / 4.0, 0.0};
}
AnalyzerSetting AnalyzerSetting::right_circular() {
    return {kPi / 4.0, kPi / 2.0};
}

AnalyzerSetting AnalyzerSetting::complement() const {
    return wrapped(theta_ + kPi / 2.0, delta_);
}

std::pair<Complex, Complex> AnalyzerSetting::transmitted_state() const {
    return {std::cos(theta_), std::polar(std::sin(theta_), delta_)};
}

std::vector<AnalyzerSetting> default_settings() {
    return {AnalyzerSetting::horizontal(), AnalyzerSetting::vertical(), AnalyzerSetting::diagonal(),
            AnalyzerSetting::right_circular()};
}

double click_probability(const DensityOperator &rho, const AnalyzerSetting &s) {
    const auto [ex, ey] = s.transmitted_state();
    const CMat2 &m = rho.mat();
    const Complex p = std::conj(ex) * (m.m11 * ex + m.m12 * ey) + std::conj(ey) * (m.m21 * ex + m.m22 * ey);
    return std::clamp(p.real(), 0.0, 1.0);
}

ShotRecord run_shots(const DensityOperator &rho, const AnalyzerSetting &s, std::int64_t shots,
                     std::uint64_t seed, std::uint64_t stream) {
    if (shots <= 0) {
        throw RangeError("shots > 0", static_cast<double>(shots));
    }
    const double p = click_probability(rho, s);
    std::int64_t clicks;
    if (p <= 0.0) {
        clicks = 0;
    } else if (p >= 1.0) {
        clicks = shots;
    } else {
        Engine rng = make_engine(seed, stream);
        std::binomial_distribution<std::int64_t> binomial(shots, p);
        clicks = binomial(rng);
    }
    return {s, shots, clicks};
}

TomographyResult tomograph(const DensityOperator &rho, std::int64_t shots_per_setting, std::uint64_t seed,
                           std::span<const AnalyzerSetting> settings, SamplingMode mode) {
    if (mode == SamplingMode::kSampled && shots_per_setting <= 0) {
        throw RangeError("shots > 0", static_cast<double>(shots_per_setting));
    }
    const StokesEstimator est = make_estimator(settings);
    const std::size_t n = settings.size();

    TomographyResult out;
    std::vector<double> freq(n);
    std::vector<double> var(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        if (mode == SamplingMode::kAnalytic) {
            freq[k] = click_probability(rho, settings[k]);
            continue;
        }
        ShotRecord rec = run_shots(rho, settings[k], shots_per_setting, seed, k);
        freq[k] = rec.frequency();
        // Jeffreys-regularized frequency keeps the variance positive at p = 0 or 1.
        const double shots = static_cast<double>(rec.shots);
        const double p_reg = (static_cast<double>(rec.clicks) + 0.5) / (shots + 1.0);
        var[k] = p_reg * (1.0 - p_reg) / shots;
        out.records.push_back(rec);
    }

    std::array<double, 3> s = est.offset;
    for (std::size_t k = 0; k < n; ++k) {
        for (int j = 0; j < 3; ++j) {
            s[j] += est.weights[k][j] * freq[k];
        }
    }
    double s0 = 1.0;
    if (est.s0_first >= 0) {
        s0 = freq[static_cast<std::size_t>(est.s0_first)] + freq[static_cast<std::size_t>(est.s0_second)];
    }
    if (!(s0 > 0.0)) {
        throw DegenerateError("estimated s0 > 0", s0);
    }
    const double norm = std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2]);

    out.stokes_hat = {1.0, s[0] / s0, s[1] / s0, s[2] / s0};
    out.deg_pol_hat = std::clamp(norm / s0, 0.0, 1.0);

    // Delta method on P = |s| / s0 with independent binomial frequencies.
    double variance = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double ds0 = 0.0;
        if (static_cast<int>(k) == est.s0_first || static_cast<int>(k) == est.s0_second) {
            ds0 = 1.0;
        }
        double grad;
        if (norm > 1e-300) {
            double dnorm = 0.0;
            for (int j = 0; j < 3; ++j) {
                dnorm += s[j] * est.weights[k][j];
            }
            dnorm /= norm;
            grad = dnorm / s0 - norm * ds0 / (s0 * s0);
            variance += grad * grad * var[k];
        } else {
            // Gradient undefined at |s| = 0; use the noise norm of s instead.
            double w = 0.0;
            for (int j = 0; j < 3; ++j) {
                w += est.weights[k][j] * est.weights[k][j];
            }
            variance += w * var[k] / (s0 * s0);
        }
    }
    out.std_err = std::sqrt(variance);
    return out;
}

TomographyResult tomograph(const DensityOperator &rho, std::int64_t shots_per_setting, std::uint64_t seed,
                           SamplingMode mode) {
    const std::vector<AnalyzerSetting> settings = default_settings();
    return tomograph(rho, shots_per_setting, seed, settings, mode);
}

}  // namespace wpipol
