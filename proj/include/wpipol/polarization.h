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

#ifndef WPIPOL_POLARIZATION_H
#define WPIPOL_POLARIZATION_H

#include "wpipol/complex.h"
#include "wpipol/states.h"

namespace wpipol {

/// The constant C in front of the single-mode positive-frequency field
/// E_i^(+) = C exp(i(k.r - wt)) a_i. Only |C|^2 is observable.
class FieldScale {
   public:
    /// Throws RangeError if |c| is zero or not finite.
    explicit FieldScale(Complex c = 1.0);
    static FieldScale from_c_sq(double c_sq);

    Complex c() const {
        return c_;
    }
    /// Exact when constructed with from_c_sq.
    double c_sq() const {
        return c_sq_;
    }

   private:
    FieldScale(Complex c, double c_sq) : c_(c), c_sq_(c_sq) {
    }
    Complex c_;
    double c_sq_;
};

/// First-order field correlation matrix Gamma_ij = <E_i^(-) E_j^(+)>, i,j in {x,y}.
struct PolarizationMatrix {
    CMat2 mat;
    double c_sq = 1.0;
};

struct StokesVector {
    double s0 = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
};

/// Gamma for a single photon in one plane-wave mode.
///
/// With E^(+)_i = C exp(i(k.r - wt)) a_i the plane-wave phase appears once as
/// exp(+i...) and once as exp(-i...) in E^(-)_i E^(+)_j and cancels, so the
/// result does not depend on the space-time point and no such parameter is
/// exposed. For a single photon <a_i^dagger a_j> = rho_ji, hence
/// Gamma = |C|^2 rho^T; for rho built from (alpha, I) this is
///
///     |C|^2 [[|a1|^2,          I conj(a1) a2],
///            [I a1 conj(a2),   |a2|^2       ]].
PolarizationMatrix polarization_matrix(const DensityOperator &rho, const FieldScale &scale = FieldScale{});

/// Checks that an externally supplied Gamma is Hermitian, PSD and has positive trace.
PolarizationMatrix validate_polarization_matrix(const CMat2 &m, double c_sq = 1.0, double tol = kValidityTol);

/// P = sqrt(1 - 4 det(Gamma) / tr(Gamma)^2), in [0, 1].
///
/// The numerator tr^2 - 4 det is evaluated in the cancellation-free form
/// (Gxx - Gyy)^2 + 4 Gxy Gyx, so P keeps full relative accuracy close to 0.
///
/// Negative radicands down to -1e-12 are clamped to zero; anything below raises
/// HermiticityError (a Hermitian matrix always has tr^2 >= 4 det). Throws
/// DegenerateError when tr(Gamma) <= 0.
double degree_of_polarization(const PolarizationMatrix &g);

/// The same quantity from the state parameters directly:
/// P = sqrt((|a1|^2 - |a2|^2)^2 + 4 |a1|^2 |a2|^2 I^2).
double degree_of_polarization_closed_form(const AmplitudePair &a, double indist);

/// s0 = Gxx + Gyy, s1 = Gxx - Gyy, s2 = Gxy + Gyx, s3 = i (Gyx - Gxy).
/// With this sign right-circular light (analyzer e = (1, i)/sqrt(2)) has s3 = +s0.
StokesVector stokes_from_gamma(const PolarizationMatrix &g);

/// sqrt(s1^2 + s2^2 + s3^2) / s0.
double degree_of_polarization(const StokesVector &s);

/// U Gamma U^dagger. Throws NonUnitaryError if U U^dagger deviates from the
/// identity by more than tol.
PolarizationMatrix unitary_conjugate(const PolarizationMatrix &g, const CMat2 &u, double tol = kValidityTol);

}  // namespace wpipol

#endif
