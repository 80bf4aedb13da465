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

#include "wpipol/states.h"

#include <cmath>

#include "wpipol/errors.h"

namespace wpipol {

AmplitudePair AmplitudePair::make(Complex a1, Complex a2, double tol) {
    const double norm_sq = std::norm(a1) + std::norm(a2);
    if (!std::isfinite(norm_sq) || std::abs(norm_sq - 1.0) > tol) {
        throw NormalizationError("|a1|^2 + |a2|^2 = 1", norm_sq - 1.0);
    }
    const double n = std::sqrt(norm_sq);
    return AmplitudePair(a1 / n, a2 / n);
}

AmplitudePair AmplitudePair::from_weights(double alpha1_sq, double relative_phase) {
    if (!(alpha1_sq >= 0.0 && alpha1_sq <= 1.0)) {
        throw RangeError("0 <= |a1|^2 <= 1", alpha1_sq);
    }
    if (!std::isfinite(relative_phase)) {
        throw RangeError("finite relative phase", relative_phase);
    }
    return AmplitudePair(std::sqrt(alpha1_sq), std::polar(std::sqrt(1.0 - alpha1_sq), relative_phase));
}

DensityOperator build_rho_id(const AmplitudePair &a) {
    return build_rho(a, 1.0);
}

DensityOperator build_rho_d(const AmplitudePair &a) {
    return build_rho(a, 0.0);
}

DensityOperator build_rho(const AmplitudePair &a, double indist) {
    if (!(indist >= 0.0 && indist <= 1.0)) {
        throw RangeError("0 <= I <= 1", indist);
    }
    const Complex coherence = indist * a.a1() * std::conj(a.a2());
    return DensityOperator(CMat2{a.p1(), coherence, std::conj(coherence), a.p2()});
}

DensityOperator validate_density(const CMat2 &m, double tol) {
    if (!is_finite(m)) {
        throw HermiticityError("finite entries", NAN);
    }
    if (const double r = hermiticity_residual(m); r > tol) {
        throw HermiticityError("rho = rho^dagger", r);
    }
    if (const double r = trace(m).real() - 1.0; std::abs(r) > tol) {
        throw TraceError("tr(rho) = 1", r);
    }
    if (!is_psd(m, tol)) {
        // Smallest eigenvalue of the Hermitian part.
        const double half_tr = 0.5 * (m.m11.real() + m.m22.real());
        const double half_gap = std::hypot(0.5 * (m.m11.real() - m.m22.real()), std::abs(m.m12));
        throw PositivityError("rho >= 0", half_tr - half_gap);
    }
    return DensityOperator(m);
}

}  // namespace wpipol
