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

#ifndef WPIPOL_IO_H
#define WPIPOL_IO_H

#include <span>
#include <string>
#include <string_view>

#include "wpipol/duality.h"
#include "wpipol/errors.h"
#include "wpipol/polarimeter.h"
#include "wpipol/polarization.h"
#include "wpipol/states.h"

namespace wpipol {

/// Malformed JSON or a document that does not follow the expected schema.
class FormatError : public Error {
   public:
    explicit FormatError(std::string what) : Error("FormatError", std::move(what), 0.0) {
    }
};

/// "%.17g": 17 significant digits, lossless for doubles.
std::string format_double(double x);

/// Parses {"rho": [[[re, im], [re, im]], [[re, im], [re, im]]]} (row-major).
/// Only the layout is checked; use read_density_json for physical validity.
CMat2 parse_rho_json(std::string_view text);
DensityOperator read_density_json(std::string_view text, double tol = kValidityTol);

/// Complex matrices are written as nested [re, im] pairs, row-major.
std::string matrix_to_json(const CMat2 &m);
std::string density_to_json(const DensityOperator &rho);
std::string gamma_to_json(const PolarizationMatrix &g);
std::string stokes_to_json(const StokesVector &s);
std::string report_to_json(const DualityReport &r);
std::string shot_record_to_json(const ShotRecord &r);
std::string tomography_to_json(const TomographyResult &t);

inline constexpr std::string_view kSweepCsvHeader =
    "alpha1_sq,indistinguishability,deg_pol,inequality_margin,identity_residual,best_circumstances";

/// Header plus one LF-terminated row per report.
std::string sweep_to_csv(std::span<const DualityReport> reports);

}  // namespace wpipol

#endif
