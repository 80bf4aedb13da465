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

#include "wpipol/complex.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "wpipol/rng.h"

namespace wpipol {

const Complex &CMat2::at(int row, int col) const {
    if (row == 0) {
        return col == 0 ? m11 : m12;
    }
    return col == 0 ? m21 : m22;
}

Complex &CMat2::at(int row, int col) {
    return const_cast<Complex &>(static_cast<const CMat2 &>(*this).at(row, col));
}

Complex trace(const CMat2 &m) {
    return m.m11 + m.m22;
}

Complex det(const CMat2 &m) {
    return m.m11 * m.m22 - m.m12 * m.m21;
}

CMat2 adjoint(const CMat2 &m) {
    return {std::conj(m.m11), std::conj(m.m21), std::conj(m.m12), std::conj(m.m22)};
}

CMat2 transpose(const CMat2 &m) {
    return {m.m11, m.m21, m.m12, m.m22};
}

CMat2 add(const CMat2 &a, const CMat2 &b) {
    return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
}

CMat2 scale(Complex c, const CMat2 &m) {
    return {c * m.m11, c * m.m12, c * m.m21, c * m.m22};
}

CMat2 matmul(const CMat2 &a, const CMat2 &b) {
    return {
        a.m11 * b.m11 + a.m12 * b.m21,
        a.m11 * b.m12 + a.m12 * b.m22,
        a.m21 * b.m11 + a.m22 * b.m21,
        a.m21 * b.m12 + a.m22 * b.m22,
    };
}

double max_abs_diff(const CMat2 &a, const CMat2 &b) {
    return std::max({std::abs(a.m11 - b.m11), std::abs(a.m12 - b.m12), std::abs(a.m21 - b.m21),
                     std::abs(a.m22 - b.m22)});
}

bool is_finite(const CMat2 &m) {
    for (const Complex &z : {m.m11, m.m12, m.m21, m.m22}) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

double hermiticity_residual(const CMat2 &m) {
    return std::max({std::abs(m.m12 - std::conj(m.m21)), std::abs(m.m11.imag()), std::abs(m.m22.imag())});
}

bool is_hermitian(const CMat2 &m, double tol) {
    return is_finite(m) && hermiticity_residual(m) <= tol;
}

bool is_psd(const CMat2 &m, double tol) {
    if (!is_hermitian(m, tol)) {
        return false;
    }
    const double tr = trace(m).real();
    const double d = det(m).real();
    return tr >= -tol && d >= -tol * std::max(1.0, tr * tr);
}

double unitarity_residual(const CMat2 &u) {
    return max_abs_diff(matmul(u, adjoint(u)), CMat2::identity());
}

CMat2 random_unitary(std::uint64_t seed) {
    Engine rng = make_engine(seed);
    std::normal_distribution<double> normal;
    auto gaussian = [&] {
        const double re = normal(rng);
        const double im = normal(rng);
        return Complex{re, im};
    };

    // Columns u and v; v is orthogonalized against u.
    Complex u1 = gaussian();
    Complex u2 = gaussian();
    const double nu = std::sqrt(std::norm(u1) + std::norm(u2));
    u1 /= nu;
    u2 /= nu;

    Complex v1 = gaussian();
    Complex v2 = gaussian();
    const Complex overlap = std::conj(u1) * v1 + std::conj(u2) * v2;
    v1 -= overlap * u1;
    v2 -= overlap * u2;
    const double nv = std::sqrt(std::norm(v1) + std::norm(v2));
    v1 /= nv;
    v2 /= nv;

    return {u1, v1, u2, v2};
}

}  // namespace wpipol
