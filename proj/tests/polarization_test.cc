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

#include <cmath>

#include "gtest/gtest.h"
#include "oracles.h"
#include "wpipol/duality.h"
#include "wpipol/errors.h"
#include "wpipol/sampling.h"

using namespace wpipol;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const Complex i1{0.0, 1.0};

// sqrt(0.4^2 + 4 * 0.7 * 0.3 * 0.5^2) = sqrt(0.37).
constexpr double kP07Half = 0.6082762530298219;

}  // namespace

TEST(PolarizationMatrix, unpolarized_and_scaled) {
    const PolarizationMatrix g = polarization_matrix(validate_density(CMat2::diag(0.5, 0.5)));
    EXPECT_EQ(g.mat, CMat2::diag(0.5, 0.5));

    const DensityOperator rho = build_rho(AmplitudePair::make(kInvSqrt2, kInvSqrt2), 1.0);
    const PolarizationMatrix g2 = polarization_matrix(rho, FieldScale::from_c_sq(2.0));
    EXPECT_LE(max_abs_diff(g2.mat, CMat2{1.0, 1.0, 1.0, 1.0}), 1e-15);
    EXPECT_DOUBLE_EQ(g2.c_sq, 2.0);
}

TEST(PolarizationMatrix, matches_printed_form_after_decomposition) {
    Engine rng = make_engine(8);
    for (int k = 0; k < 5000; ++k) {
        StateParams s = random_state(rng);
        const DensityOperator rho = build_rho(s.amps, s.indist);
        const MandelDecomposition d = mandel_decompose(rho);
        const Complex a1 = d.amps.a1();
        const Complex a2 = d.amps.a2();
        const CMat2 printed{std::norm(a1), d.indist * std::conj(a1) * a2, d.indist * a1 * std::conj(a2),
                            std::norm(a2)};
        EXPECT_LE(max_abs_diff(polarization_matrix(rho).mat, printed), 1e-12);
    }
}

TEST(PolarizationMatrix, off_diagonal_orientation) {
    // Gamma_xy = <a_x^dagger a_y> = rho_yx.
    const AmplitudePair a = AmplitudePair::make(kInvSqrt2, kInvSqrt2 * i1);
    const PolarizationMatrix g = polarization_matrix(build_rho_id(a));
    EXPECT_LE(std::abs(g.mat.m12 - 0.5 * i1), 1e-15);
    EXPECT_LE(std::abs(g.mat.m21 + 0.5 * i1), 1e-15);
}

TEST(FieldScale, rejects_zero) {
    EXPECT_THROW(FieldScale(0.0), RangeError);
    EXPECT_THROW(FieldScale::from_c_sq(-1.0), RangeError);
    EXPECT_DOUBLE_EQ(FieldScale(Complex(0.0, 3.0)).c_sq(), 9.0);
}

TEST(DegreeOfPolarization, reference_values) {
    EXPECT_DOUBLE_EQ(degree_of_polarization(PolarizationMatrix{CMat2::diag(1.0, 0.0)}), 1.0);
    EXPECT_DOUBLE_EQ(degree_of_polarization(PolarizationMatrix{CMat2::diag(0.5, 0.5)}), 0.0);

    const AmplitudePair a = AmplitudePair::from_weights(0.7);
    const PolarizationMatrix g = polarization_matrix(build_rho(a, 0.5));
    const double oracle = oracle::deg_pol_from_eigenvalues(g.mat.m11.real(), g.mat.m12, g.mat.m22.real());
    EXPECT_NEAR(oracle, kP07Half, 1e-15);
    EXPECT_NEAR(degree_of_polarization(g), kP07Half, 1e-15);
}

TEST(DegreeOfPolarization, errors_and_clamping) {
    EXPECT_THROW(degree_of_polarization(PolarizationMatrix{CMat2::diag(0.0, 0.0)}), DegenerateError);
    EXPECT_THROW(degree_of_polarization(PolarizationMatrix{CMat2::diag(-1.0, 0.5)}), DegenerateError);
    // tr^2 < 4 det only happens off the Hermitian set.
    EXPECT_THROW(degree_of_polarization(PolarizationMatrix{CMat2{0.5, 1.0, -1.0, 0.5}}), HermiticityError);
    // Tiny negative radicand: clamped.
    const double eps = 1e-17;
    EXPECT_EQ(degree_of_polarization(PolarizationMatrix{CMat2{0.5, eps, -eps, 0.5}}), 0.0);
    // det < 0 beyond tolerance is not a valid Gamma.
    EXPECT_THROW(degree_of_polarization(PolarizationMatrix{CMat2{0.5, 0.6, 0.6, 0.5}}), PositivityError);
}

TEST(DegreeOfPolarization, closed_form_reference_values) {
    EXPECT_NEAR(degree_of_polarization_closed_form(AmplitudePair::from_weights(0.5), 0.0), 0.0, 1e-15);
    Engine rng = make_engine(3);
    for (int k = 0; k < 100; ++k) {
        EXPECT_NEAR(degree_of_polarization_closed_form(random_state(rng).amps, 1.0), 1.0, 1e-15);
    }
    EXPECT_NEAR(degree_of_polarization_closed_form(AmplitudePair::from_weights(0.7), 0.5), kP07Half, 1e-15);
    EXPECT_THROW(degree_of_polarization_closed_form(AmplitudePair::from_weights(0.7), 1.5), RangeError);
}

TEST(DegreeOfPolarization, agrees_with_eigenvalue_and_brute_force_oracles) {
    Engine rng = make_engine(17);
    for (int k = 0; k < 200; ++k) {
        const StateParams s = random_state(rng);
        const PolarizationMatrix g = polarization_matrix(build_rho(s.amps, s.indist));
        const double p = degree_of_polarization(g);
        EXPECT_NEAR(p, oracle::deg_pol_from_eigenvalues(g.mat.m11.real(), g.mat.m12, g.mat.m22.real()), 1e-12);
        // Coarse grid: accuracy limited by the grid spacing.
        const double brute = 2.0 * oracle::max_transmission(g.mat.m11.real(), g.mat.m12, g.mat.m22.real(), 90) - 1.0;
        EXPECT_NEAR(p, brute, 2e-3);
        EXPECT_LE(brute, p + 1e-12);
    }
}

TEST(DegreeOfPolarization, literal_det_trace_form_and_near_zero_accuracy) {
    Engine rng = make_engine(19);
    for (int k = 0; k < 5000; ++k) {
        const StateParams s = random_state(rng);
        const PolarizationMatrix g = polarization_matrix(build_rho(s.amps, s.indist));
        const double tr = (g.mat.m11 + g.mat.m22).real();
        const double d = (g.mat.m11 * g.mat.m22 - g.mat.m12 * g.mat.m21).real();
        const double literal = std::sqrt(std::max(0.0, 1.0 - 4.0 * d / (tr * tr)));
        // The literal form loses ~1e-16 / P to cancellation; compare where that is negligible.
        if (literal > 1e-2) {
            EXPECT_NEAR(degree_of_polarization(g), literal, 1e-12);
        }
    }
    // Equal-weight states with a relative phase: |a1|^2 and |a2|^2 differ in the last bit.
    for (double phase : {0.5, 1.0, 2.0, 4.5}) {
        const AmplitudePair a = AmplitudePair::from_weights(0.5, phase);
        for (double i : {0.0, 1e-9, 1e-4}) {
            const double p = degree_of_polarization(polarization_matrix(build_rho(a, i)));
            EXPECT_NEAR(p, i, 1e-15) << "phase=" << phase << " I=" << i;
        }
    }
}

TEST(DegreeOfPolarization, scale_invariance_exact_for_powers_of_two) {
    Engine rng = make_engine(23);
    for (int k = 0; k < 1000; ++k) {
        const StateParams s = random_state(rng);
        const DensityOperator rho = build_rho(s.amps, s.indist);
        const double p = degree_of_polarization(polarization_matrix(rho));
        EXPECT_EQ(degree_of_polarization(polarization_matrix(rho, FieldScale::from_c_sq(4.0))), p);
        EXPECT_EQ(degree_of_polarization(polarization_matrix(rho, FieldScale::from_c_sq(0.125))), p);
        EXPECT_NEAR(degree_of_polarization(polarization_matrix(rho, FieldScale::from_c_sq(3.7))), p, 1e-12);
    }
}

TEST(Stokes, reference_vectors) {
    const StokesVector u = stokes_from_gamma(PolarizationMatrix{CMat2::diag(0.5, 0.5)});
    EXPECT_DOUBLE_EQ(u.s0, 1.0);
    EXPECT_DOUBLE_EQ(u.s1, 0.0);
    EXPECT_DOUBLE_EQ(u.s2, 0.0);
    EXPECT_DOUBLE_EQ(u.s3, 0.0);

    const StokesVector x = stokes_from_gamma(PolarizationMatrix{CMat2::diag(1.0, 0.0)});
    EXPECT_DOUBLE_EQ(x.s0, 1.0);
    EXPECT_DOUBLE_EQ(x.s1, 1.0);

    // s3 = i (Gyx - Gxy) = i (0.5i + 0.5i) = -1 for this matrix taken as Gamma.
    const StokesVector c = stokes_from_gamma(PolarizationMatrix{CMat2{0.5, -0.5 * i1, 0.5 * i1, 0.5}});
    EXPECT_DOUBLE_EQ(c.s0, 1.0);
    EXPECT_DOUBLE_EQ(c.s1, 0.0);
    EXPECT_DOUBLE_EQ(c.s2, 0.0);
    EXPECT_DOUBLE_EQ(c.s3, -1.0);

    // The photon transmitted by a right-circular analyzer, (1, i)/sqrt(2), has s3 = +s0.
    const AmplitudePair right = AmplitudePair::make(kInvSqrt2, kInvSqrt2 * i1);
    const StokesVector r = stokes_from_gamma(polarization_matrix(build_rho_id(right)));
    EXPECT_NEAR(r.s3, r.s0, 1e-15);
}

TEST(Stokes, consistency_with_det_trace_route) {
    Engine rng = make_engine(31);
    for (int k = 0; k < 20000; ++k) {
        const StateParams s = random_state(rng, 0.05);
        const PolarizationMatrix g = polarization_matrix(build_rho(s.amps, s.indist), FieldScale::from_c_sq(2.5));
        const double p = degree_of_polarization(g);
        EXPECT_NEAR(degree_of_polarization(stokes_from_gamma(g)), p, 1e-12);
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, 1.0);
    }
}

TEST(UnitaryConjugate, reference_and_errors) {
    const PolarizationMatrix g{CMat2{0.3, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.7}};
    EXPECT_EQ(unitary_conjugate(g, CMat2::identity()).mat, g.mat);

    const CMat2 h = kInvSqrt2 * CMat2{1.0, 1.0, 1.0, -1.0};
    const PolarizationMatrix x{CMat2::diag(1.0, 0.0)};
    EXPECT_LE(max_abs_diff(unitary_conjugate(x, h).mat, CMat2{0.5, 0.5, 0.5, 0.5}), 1e-15);

    EXPECT_THROW(unitary_conjugate(g, CMat2::diag(2.0, 1.0)), NonUnitaryError);
}

TEST(UnitaryConjugate, preserves_degree_of_polarization) {
    Engine rng = make_engine(77);
    for (int k = 0; k < 10000; ++k) {
        const StateParams s = random_state(rng);
        const PolarizationMatrix g = polarization_matrix(build_rho(s.amps, s.indist));
        const CMat2 u = random_unitary(static_cast<std::uint64_t>(k) + 1000);
        const PolarizationMatrix c = unitary_conjugate(g, u);
        EXPECT_NEAR(trace(c.mat).real(), trace(g.mat).real(), 1e-12);
        EXPECT_NEAR(degree_of_polarization(c), degree_of_polarization(g), 1e-12);
    }
}
