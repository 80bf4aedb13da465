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

#ifndef WPIPOL_DUALITY_H
#define WPIPOL_DUALITY_H

#include <span>
#include <vector>

#include "wpipol/polarization.h"
#include "wpipol/states.h"

namespace wpipol {

/// Unique split rho = I * rho_id + (1 - I) * rho_d of a two-path density operator.
///
/// Amplitudes are gauge-fixed with a1 real and non-negative. When one path is
/// empty (rho11 * rho22 <= tol^2) the coherences cannot fix I; the
/// decomposition then reports I = 0 and sets `degenerate`.
struct MandelDecomposition {
    double indist = 0.0;
    AmplitudePair amps = AmplitudePair::from_weights(1.0);
    DensityOperator rho_id = build_rho_id(amps);
    DensityOperator rho_d = build_rho_d(amps);
    bool degenerate = false;

    /// indist * rho_id + (1 - indist) * rho_d.
    CMat2 reconstruct() const;
};

MandelDecomposition mandel_decompose(const DensityOperator &rho, double tol = kValidityTol);

/// Degree of polarization versus degree of indistinguishability for one state.
struct DualityReport {
    double indist = 0.0;
    double deg_pol = 0.0;
    double alpha1_sq = 0.0;
    /// P^2 - I^2 - (1 - I^2)(2|a1|^2 - 1)^2, zero up to rounding.
    double identity_residual = 0.0;
    /// P - I, never negative beyond rounding.
    double inequality_margin = 0.0;
    /// Equal intensities in both paths, | |a1|^2 - |a2|^2 | <= 1e-9.
    bool best_circumstances = false;
    bool degenerate = false;
};

inline constexpr double kBestCircumstancesTol = 1e-9;

DualityReport duality_report(const DensityOperator &rho, const FieldScale &scale = FieldScale{});

/// One report per (alpha1_sq, indist) pair, alpha-major, for states with real
/// non-negative amplitudes. Throws RangeError for grid values outside [0, 1].
std::vector<DualityReport> sweep(std::span<const double> grid_alpha,
                                 std::span<const double> grid_indist,
                                 const FieldScale &scale = FieldScale{});

}  // namespace wpipol

#endif
