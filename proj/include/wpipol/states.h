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

#ifndef WPIPOL_STATES_H
#define WPIPOL_STATES_H

#include "wpipol/complex.h"

namespace wpipol {

/// The fixed basis every matrix in the library is written in: the two
/// transverse polarization directions of a single plane-wave mode k,
/// |psi_1> = |x>, |psi_2> = |y>, in that order. The mode label is metadata
/// only and never enters a numeric result.
struct BasisLabel {
    static constexpr const char *mode = "k";
    static constexpr const char *first_axis = "x";
    static constexpr const char *second_axis = "y";
};

/// Superposition weights (a1, a2) of the two single-photon states, with
/// |a1|^2 + |a2|^2 = 1. Phases are kept exactly as given.
class AmplitudePair {
   public:
    /// Accepts amplitudes within `tol` of normalized and rescales them to unit
    /// norm; throws NormalizationError otherwise.
    static AmplitudePair make(Complex a1, Complex a2, double tol = kValidityTol);

    /// a1 = sqrt(alpha1_sq), a2 = sqrt(1 - alpha1_sq) * exp(i * relative_phase).
    /// Throws RangeError unless alpha1_sq is in [0, 1].
    static AmplitudePair from_weights(double alpha1_sq, double relative_phase = 0.0);

    Complex a1() const {
        return a1_;
    }
    Complex a2() const {
        return a2_;
    }
    double p1() const {
        return std::norm(a1_);
    }
    double p2() const {
        return std::norm(a2_);
    }

   private:
    AmplitudePair(Complex a1, Complex a2) : a1_(a1), a2_(a2) {
    }
    Complex a1_;
    Complex a2_;
};

/// A validated single-photon density operator in the {|x>, |y>} basis:
/// Hermitian, unit trace, positive semidefinite.
class DensityOperator {
   public:
    const CMat2 &mat() const {
        return mat_;
    }
    double rho11() const {
        return mat_.m11.real();
    }
    double rho22() const {
        return mat_.m22.real();
    }
    Complex rho12() const {
        return mat_.m12;
    }

   private:
    friend DensityOperator validate_density(const CMat2 &m, double tol);
    friend DensityOperator build_rho(const AmplitudePair &a, double indist);
    explicit DensityOperator(const CMat2 &m) : mat_(m) {
    }
    CMat2 mat_;
};

/// Projector onto the coherent superposition a1|x> + a2|y> (rank 1).
DensityOperator build_rho_id(const AmplitudePair &a);

/// Incoherent mixture diag(|a1|^2, |a2|^2).
DensityOperator build_rho_d(const AmplitudePair &a);

/// indist * build_rho_id(a) + (1 - indist) * build_rho_d(a). The diagonal does not
/// depend on indist; only the coherences are scaled. Throws RangeError unless
/// indist is in [0, 1].
DensityOperator build_rho(const AmplitudePair &a, double indist);

/// Gatekeeper for externally supplied matrices. Checks, in this order,
/// finiteness/Hermiticity, unit trace and positivity, throwing
/// HermiticityError, TraceError or PositivityError with the residual.
DensityOperator validate_density(const CMat2 &m, double tol = kValidityTol);

}  // namespace wpipol

#endif
