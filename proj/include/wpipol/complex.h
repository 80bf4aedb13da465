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

#ifndef WPIPOL_COMPLEX_H
#define WPIPOL_COMPLEX_H

#include <complex>
#include <cstdint>

namespace wpipol {

using Complex = std::complex<double>;

/// Default tolerance of the validity predicates (Hermitian, PSD, trace-1, ...).
inline constexpr double kValidityTol = 1e-9;
/// Tolerance used when checking algebraic identities between computation paths.
inline constexpr double kIdentityTol = 1e-12;

/// 2x2 complex matrix, row-major: [[m11, m12], [m21, m22]].
struct CMat2 {
    Complex m11{};
    Complex m12{};
    Complex m21{};
    Complex m22{};

    static constexpr CMat2 identity() {
        return {1.0, 0.0, 0.0, 1.0};
    }
    static constexpr CMat2 diag(Complex a, Complex b) {
        return {a, 0.0, 0.0, b};
    }

    /// Entry access with 0-based (row, col).
    const Complex &at(int row, int col) const;
    Complex &at(int row, int col);

    bool operator==(const CMat2 &other) const = default;
};

Complex trace(const CMat2 &m);
Complex det(const CMat2 &m);
CMat2 adjoint(const CMat2 &m);
CMat2 transpose(const CMat2 &m);
CMat2 add(const CMat2 &a, const CMat2 &b);
CMat2 scale(Complex c, const CMat2 &m);
CMat2 matmul(const CMat2 &a, const CMat2 &b);

inline CMat2 operator+(const CMat2 &a, const CMat2 &b) {
    return add(a, b);
}
inline CMat2 operator-(const CMat2 &a, const CMat2 &b) {
    return add(a, scale(-1.0, b));
}
inline CMat2 operator*(const CMat2 &a, const CMat2 &b) {
    return matmul(a, b);
}
inline CMat2 operator*(Complex c, const CMat2 &m) {
    return scale(c, m);
}

/// Largest entrywise modulus of a - b.
double max_abs_diff(const CMat2 &a, const CMat2 &b);
bool is_finite(const CMat2 &m);

/// max(|m12 - conj(m21)|, |Im m11|, |Im m22|).
double hermiticity_residual(const CMat2 &m);
bool is_hermitian(const CMat2 &m, double tol = kValidityTol);

/// Closed-form 2x2 test: Hermitian, trace >= -tol, det >= -tol * max(1, trace^2).
bool is_psd(const CMat2 &m, double tol = kValidityTol);

/// Largest entrywise deviation of U U^dagger from the identity.
double unitarity_residual(const CMat2 &u);

/// Seed-deterministic unitary drawn by Gram-Schmidt on a pair of complex
/// Gaussian columns (Haar measure on U(2)).
CMat2 random_unitary(std::uint64_t seed);

}  // namespace wpipol

#endif
