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

#include "wpipol/duality.h"

#include <algorithm>
#include <cmath>

#include "wpipol/errors.h"

namespace wpipol {

namespace {

// Slack on |rho12|^2 <= rho11 rho22 before a state is rejected.
constexpr double kCoherenceSlack = 1e-9;

}  // namespace

CMat2 MandelDecomposition::reconstruct() const {
    return indist * rho_id.mat() + (1.0 - indist) * rho_d.mat();
}

MandelDecomposition mandel_decompose(const DensityOperator &rho, double tol) {
    const double p1 = std::max(rho.rho11(), 0.0);
    const double p2 = std::max(rho.rho22(), 0.0);
    const Complex rho12 = rho.rho12();
    const double product = p1 * p2;
    const double norm = p1 + p2;

    if (std::norm(rho12) > product * (1.0 + kCoherenceSlack) + tol * tol) {
        throw PositivityError("|rho12|^2 <= rho11 rho22", std::norm(rho12) - product);
    }

    MandelDecomposition out;
    if (product <= tol * tol) {
        out.degenerate = true;
        out.indist = 0.0;
        out.amps = AmplitudePair::make(std::sqrt(p1 / norm), std::sqrt(p2 / norm));
    } else {
        out.indist = std::min(std::abs(rho12) / std::sqrt(product), 1.0);
        // rho12 = I a1 conj(a2) with a1 >= 0 fixes arg(a2) = -arg(rho12).
        const double phase = rho12 == Complex{} ? 0.0 : -std::arg(rho12);
        out.amps = AmplitudePair::make(std::sqrt(p1 / norm), std::polar(std::sqrt(p2 / norm), phase));
    }
    out.rho_id = build_rho_id(out.amps);
    out.rho_d = build_rho_d(out.amps);
    return out;
}

DualityReport duality_report(const DensityOperator &rho, const FieldScale &scale) {
    const MandelDecomposition d = mandel_decompose(rho);
    const double p = degree_of_polarization(polarization_matrix(rho, scale));
    const double a1_sq = rho.rho11();
    const double i = d.indist;
    const double bias = 2.0 * a1_sq - 1.0;

    DualityReport r;
    r.indist = i;
    r.deg_pol = p;
    r.alpha1_sq = a1_sq;
    r.identity_residual = p * p - i * i - (1.0 - i * i) * bias * bias;
    r.inequality_margin = p - i;
    r.best_circumstances = std::abs(rho.rho11() - rho.rho22()) <= kBestCircumstancesTol;
    r.degenerate = d.degenerate;
    return r;
}

std::vector<DualityReport> sweep(std::span<const double> grid_alpha, std::span<const double> grid_indist,
                                 const FieldScale &scale) {
    for (double a : grid_alpha) {
        if (!(a >= 0.0 && a <= 1.0)) {
            throw RangeError("0 <= |a1|^2 <= 1", a);
        }
    }
    for (double i : grid_indist) {
        if (!(i >= 0.0 && i <= 1.0)) {
            throw RangeError("0 <= I <= 1", i);
        }
    }

    std::vector<DualityReport> out;
    out.reserve(grid_alpha.size() * grid_indist.size());
    for (double a : grid_alpha) {
        const AmplitudePair amps = AmplitudePair::from_weights(a);
        for (double i : grid_indist) {
            DualityReport r = duality_report(build_rho(amps, i), scale);
            // Label rows with the grid value rather than its rounded square.
            r.alpha1_sq = a;
            out.push_back(r);
        }
    }
    return out;
}

}  // namespace wpipol
