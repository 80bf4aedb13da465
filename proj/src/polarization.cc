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

#include "wpipol/polarization.h"

#include <algorithm>
#include <cmath>

#include "wpipol/errors.h"

namespace wpipol {

namespace {

constexpr double kRadicandClamp = 1e-12;

}  // namespace

FieldScale::FieldScale(Complex c) : c_(c), c_sq_(std::norm(c)) {
    const double m = std::abs(c);
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw RangeError("|C| > 0", m);
    }
}

FieldScale FieldScale::from_c_sq(double c_sq) {
    if (!(c_sq > 0.0) || !std::isfinite(c_sq)) {
        throw RangeError("|C|^2 > 0", c_sq);
    }
    return FieldScale(std::sqrt(c_sq), c_sq);
}

PolarizationMatrix polarization_matrix(const DensityOperator &rho, const FieldScale &scale) {
    CMat2 g = scale.c_sq() * transpose(rho.mat());
#ifdef WPIPOL_FAULT_FLIP_OFFDIAG
    // Mutation used only by the fault-injection test build.
    g.m12 = -g.m12;
    g.m21 = -g.m21;
#endif
    return {g, scale.c_sq()};
}

PolarizationMatrix validate_polarization_matrix(const CMat2 &m, double c_sq, double tol) {
    if (!is_finite(m)) {
        throw HermiticityError("finite entries", NAN);
    }
    if (const double r = hermiticity_residual(m); r > tol) {
        throw HermiticityError("Gamma = Gamma^dagger", r);
    }
    if (const double tr = trace(m).real(); !(tr > 0.0)) {
        throw DegenerateError("tr(Gamma) > 0", tr);
    }
    if (!is_psd(m, tol)) {
        throw PositivityError("Gamma >= 0", det(m).real());
    }
    if (!(c_sq > 0.0) || !std::isfinite(c_sq)) {
        throw RangeError("|C|^2 > 0", c_sq);
    }
    return {m, c_sq};
}

double degree_of_polarization(const PolarizationMatrix &g) {
    const double tr = trace(g.mat).real();
    if (!(tr > 0.0)) {
        throw DegenerateError("tr(Gamma) > 0", tr);
    }
    // tr^2 - 4 det expanded as (g11 - g22)^2 + 4 g12 g21, which is an identity for
    // any 2x2 matrix but avoids the cancellation of 1 - 4 det / tr^2 near P = 0.
    const Complex diff = g.mat.m11 - g.mat.m22;
    const double discriminant = (diff * diff + 4.0 * g.mat.m12 * g.mat.m21).real();
    const double radicand = discriminant / (tr * tr);
    if (radicand < 0.0) {
        if (radicand < -kRadicandClamp) {
            throw HermiticityError("tr(Gamma)^2 >= 4 det(Gamma)", radicand);
        }
        return 0.0;
    }
    if (radicand > 1.0) {
        // det < 0: only rounding is tolerated.
        if (radicand - 1.0 > kValidityTol) {
            throw PositivityError("det(Gamma) >= 0", 1.0 - radicand);
        }
        return 1.0;
    }
    return std::sqrt(radicand);
}

double degree_of_polarization_closed_form(const AmplitudePair &a, double indist) {
    if (!(indist >= 0.0 && indist <= 1.0)) {
        throw RangeError("0 <= I <= 1", indist);
    }
    const double p1 = a.p1();
    const double p2 = a.p2();
    const double diff = p1 - p2;
    return std::clamp(std::sqrt(diff * diff + 4.0 * p1 * p2 * indist * indist), 0.0, 1.0);
}

StokesVector stokes_from_gamma(const PolarizationMatrix &g) {
    const CMat2 &m = g.mat;
    const Complex i{0.0, 1.0};
    return {
        (m.m11 + m.m22).real(),
        (m.m11 - m.m22).real(),
        (m.m12 + m.m21).real(),
        (i * (m.m21 - m.m12)).real(),
    };
}

double degree_of_polarization(const StokesVector &s) {
    if (!(s.s0 > 0.0)) {
        throw DegenerateError("s0 > 0", s.s0);
    }
    return std::sqrt(s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3) / s.s0;
}

PolarizationMatrix unitary_conjugate(const PolarizationMatrix &g, const CMat2 &u, double tol) {
    if (const double r = unitarity_residual(u); !(r <= tol)) {
        throw NonUnitaryError("U U^dagger = 1", r);
    }
    return {matmul(matmul(u, g.mat), adjoint(u)), g.c_sq};
}

}  // namespace wpipol
