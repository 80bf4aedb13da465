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

#ifndef WPIPOL_POLARIMETER_H
#define WPIPOL_POLARIMETER_H

#include <cstdint>
#include <span>
#include <vector>

#include "wpipol/polarization.h"
#include "wpipol/states.h"

namespace wpipol {

/// Analyzer transmitting |e> = cos(theta)|x> + exp(i delta) sin(theta)|y>.
/// theta in [0, pi) is the transmission axis measured from x; delta in [0, 2 pi)
/// is the retardance applied to y ahead of the analyzer.
class AnalyzerSetting {
   public:
    /// Throws RangeError for angles outside their ranges.
    AnalyzerSetting(double theta, double delta);
    /// Reduces arbitrary angles into range. The transmitted state changes by a
    /// global phase only, so every probability is preserved.
    static AnalyzerSetting wrapped(double theta, double delta);

    static AnalyzerSetting horizontal();
    static AnalyzerSetting vertical();
    static AnalyzerSetting diagonal();
    static AnalyzerSetting right_circular();

    /// The orthogonal analyzer (theta + pi/2).
    AnalyzerSetting complement() const;

    double theta() const {
        return theta_;
    }
    double delta() const {
        return delta_;
    }
    /// The transmitted state as a column (e_x, e_y).
    std::pair<Complex, Complex> transmitted_state() const;

    bool operator==(const AnalyzerSetting &) const = default;

   private:
    double theta_;
    double delta_;
};

struct ShotRecord {
    AnalyzerSetting setting;
    std::int64_t shots = 0;
    std::int64_t clicks = 0;

    double frequency() const {
        return static_cast<double>(clicks) / static_cast<double>(shots);
    }
};

/// Born-rule transmission probability <e|rho|e>, clamped to [0, 1].
///
/// In terms of Gamma = |C|^2 rho^T this is (e^T Gamma conj(e)) / tr(Gamma).
double click_probability(const DensityOperator &rho, const AnalyzerSetting &s);

/// Binomial(shots, p) detections from the sub-stream (seed, stream). Throws
/// RangeError on shots <= 0.
ShotRecord run_shots(const DensityOperator &rho, const AnalyzerSetting &s, std::int64_t shots,
                     std::uint64_t seed, std::uint64_t stream = 0);

/// H, V, D, R.
std::vector<AnalyzerSetting> default_settings();

enum class SamplingMode {
    kSampled,
    /// Exact probabilities replace the click frequencies (infinite shots).
    kAnalytic,
};

struct TomographyResult {
    /// Estimated Stokes vector normalized to s0 = 1.
    StokesVector stokes_hat;
    double deg_pol_hat = 0.0;
    /// 1-sigma binomial error propagated to deg_pol_hat. Zero in analytic mode.
    double std_err = 0.0;
    std::vector<ShotRecord> records;
};

/// Stokes estimation from click frequencies behind each analyzer.
///
/// The default H/V/D/R set gives s1 = pH - pV, s2 = 2 pD - 1, s3 = 2 pR - 1 and
/// s0 = pH + pV; deg_pol_hat = |s| / s0 clamped to [0, 1]. Any other set must be
/// informationally complete and is fitted by least squares, with s0 taken from
/// the first complementary pair present (1 if none).
///
/// deg_pol_hat is biased upwards when the true P is near 0 (the norm of a noisy
/// vector); the bias is of order 1/sqrt(shots) and is not corrected.
///
/// Setting k is sampled from stream k of `seed`, so results do not depend on the
/// evaluation order. Throws RangeError on shots_per_setting <= 0 in sampled mode
/// or on a rank-deficient setting list.
TomographyResult tomograph(const DensityOperator &rho, std::int64_t shots_per_setting, std::uint64_t seed,
                           std::span<const AnalyzerSetting> settings,
                           SamplingMode mode = SamplingMode::kSampled);

TomographyResult tomograph(const DensityOperator &rho, std::int64_t shots_per_setting, std::uint64_t seed,
                           SamplingMode mode = SamplingMode::kSampled);

}  // namespace wpipol

#endif
