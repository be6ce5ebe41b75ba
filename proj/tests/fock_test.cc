// Copyright 2026 The gds Authors
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

#include "gds/fock.h"

#include <cmath>
#include <numbers>
#include <string>

#include "gtest/gtest.h"

#include "gds/analysis.h"
#include "gds/errors.h"
#include "gds/verify.h"

using namespace gds;

namespace {

constexpr double kPi = std::numbers::pi;

double hermiticity(const FockOperator &op) {
    return (op.matrix - op.matrix.adjoint()).cwiseAbs().maxCoeff();
}

double marginal_a(const FockOperator &op, int m) {
    double acc = 0.0;
    for (int n = 0; n < op.cutoff; ++n) {
        acc += op.matrix(m * op.cutoff + n, m * op.cutoff + n).real();
    }
    return acc;
}

double marginal_b(const FockOperator &op, int n) {
    double acc = 0.0;
    for (int m = 0; m < op.cutoff; ++m) {
        acc += op.matrix(m * op.cutoff + n, m * op.cutoff + n).real();
    }
    return acc;
}

FockOperator pure_basis_state(int m, int n, int cutoff) {
    int dim = cutoff * cutoff;
    FockOperator out{cutoff, ComplexMatrix::Zero(dim, dim), 0.0};
    out.matrix(m * cutoff + n, m * cutoff + n) = 1.0;
    return out;
}

}  // namespace

TEST(BuildThermal, vacuum) {
    FockOperator v = build_thermal(1.0, 1.0, 6);
    EXPECT_EQ(v.trace(), 1.0);
    EXPECT_EQ(v.deficit, 0.0);
    EXPECT_EQ(v.matrix(0, 0), std::complex<double>(1.0, 0.0));
}

TEST(BuildThermal, geometric_weights) {
    FockOperator t = build_thermal(3.0, 1.0, 12);
    EXPECT_NEAR(marginal_a(t, 0), 0.5, 1e-15);
    EXPECT_NEAR(marginal_a(t, 3), 1.0 / 16.0, 1e-15);
    EXPECT_NEAR(t.deficit, std::pow(0.5, 12), 1e-15);
    EXPECT_FALSE(t.within());
    EXPECT_TRUE(build_thermal(3.0, 1.0, 24).within());
}

TEST(BuildThermal, photon_number) {
    FockOperator t = build_thermal(3.0, 2.0, 40);
    double want = photon_number({StateClass::LinearMixed, 3.0, 2.0, 0.0});
    EXPECT_NEAR(mean_photon_number(t), want, 1e-9);
    EXPECT_LT(t.deficit, 1e-9);
}

TEST(BuildThermal, rejects_bad_input) {
    EXPECT_THROW(build_thermal(0.5, 1.0, 8), DomainError);
    EXPECT_THROW(build_thermal(1.0, 1.0, 1), DomainError);
}

TEST(TwoModeSqueeze, zero_is_identity) {
    FockOperator t = build_thermal(2.0, 3.0, 8);
    FockOperator u = apply_two_mode_squeeze(t, 0.0);
    EXPECT_LT((u.matrix - t.matrix).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(TwoModeSqueeze, vacuum_schmidt_weights) {
    const int d = 16;
    double r = 0.5;
    FockOperator s = apply_two_mode_squeeze(build_thermal(1.0, 1.0, d), r);
    double t2 = std::pow(std::tanh(r), 2);
    double c2 = std::pow(std::cosh(r), 2);
    for (int k = 0; k <= d - 4; ++k) {
        EXPECT_NEAR(s.matrix(k * d + k, k * d + k).real(), std::pow(t2, k) / c2, 1e-6) << k;
    }
    EXPECT_NEAR(mean_photon_number(s), 2 * std::pow(std::sinh(r), 2), 1e-6);
    EXPECT_LT(hermiticity(s), 1e-12);
}

TEST(TwoModeSqueeze, trace_preserved_without_leakage) {
    FockOperator s = apply_two_mode_squeeze(build_thermal(1.0, 1.2, 16), 0.2);
    EXPECT_NEAR(s.trace(), build_thermal(1.0, 1.2, 16).trace(), 1e-10);
}

TEST(TwoModeSqueeze, leakage_is_reported) {
    FockOperator s = apply_two_mode_squeeze(build_thermal(1.0, 1.0, 6), 1.0);
    EXPECT_GT(s.deficit, 1e-3);
    EXPECT_NEAR(s.deficit, 1.0 - s.trace(), 1e-15);
    EXPECT_FALSE(s.within());
}

TEST(BeamSplitter, zero_is_identity) {
    FockOperator t = build_thermal(2.0, 3.0, 8);
    FockOperator u = apply_beam_splitter(t, 0.0);
    EXPECT_LT((u.matrix - t.matrix).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(BeamSplitter, conserves_photons_and_trace) {
    // Weight beyond total photon number 23 is below 1e-15 here.
    FockOperator t = build_thermal(1.2, 1.5, 24);
    FockOperator u = apply_beam_splitter(t, 0.7);
    EXPECT_NEAR(mean_photon_number(u), mean_photon_number(t), 1e-10);
    EXPECT_NEAR(u.trace(), t.trace(), 1e-10);
    EXPECT_LT(hermiticity(u), 1e-12);
}

TEST(BeamSplitter, quarter_turn_swaps_marginals) {
    FockOperator t = build_thermal(3.0, 1.0, 10);
    FockOperator u = apply_beam_splitter(t, kPi / 2);
    for (int k = 0; k < 10; ++k) {
        EXPECT_NEAR(marginal_a(u, k), marginal_b(t, k), 1e-12);
        EXPECT_NEAR(marginal_b(u, k), marginal_a(t, k), 1e-12);
    }
}

TEST(LocalPhase, identities) {
    FockOperator s = apply_two_mode_squeeze(build_thermal(1.5, 1.0, 8), 0.3);
    EXPECT_EQ(apply_local_phase(s, 0.0).matrix, s.matrix);
    EXPECT_LT((apply_local_phase(s, 2 * kPi).matrix - s.matrix).cwiseAbs().maxCoeff(), 1e-13);
    FockOperator t = build_thermal(2.0, 3.0, 8);
    EXPECT_EQ(apply_local_phase(t, 1.1).matrix, t.matrix);
    FockOperator p = apply_local_phase(s, 1.1);
    EXPECT_NEAR(p.trace(), s.trace(), 1e-14);
    EXPECT_LT(hermiticity(p), 1e-14);
}

TEST(ChernoffTrace, identical_states) {
    FockOperator s = apply_two_mode_squeeze(build_thermal(2.0, 1.0, 10), 0.3);
    for (double p : {0.1, 0.5, 0.9}) {
        EXPECT_NEAR(chernoff_trace(s, s, p), 1.0, 1e-10);
    }
}

TEST(ChernoffTrace, orthogonal_pure_states) {
    FockOperator a = pure_basis_state(0, 1, 4);
    FockOperator b = pure_basis_state(2, 0, 4);
    EXPECT_EQ(chernoff_trace(a, b, 0.5), 0.0);
    EXPECT_EQ(single_copy_error(a, b), 0.0);
}

TEST(ChernoffTrace, squeezed_vacuum_against_gaussian_formula) {
    FockOperator rho = apply_two_mode_squeeze(build_thermal(1.0, 1.0, 14), 0.4);
    FockOperator sigma = apply_local_phase(rho, kPi);
    double want = 1.0 / (1.0 + std::pow(std::sinh(0.8), 2));
    EXPECT_NEAR(chernoff_trace(rho, sigma, 0.5), want, 1e-4);
}

TEST(ChernoffTrace, convex_and_swap_symmetric) {
    FockOperator rho = apply_beam_splitter(build_thermal(3.0, 1.0, 12), 0.5);
    FockOperator sigma = apply_local_phase(rho, 2.0);
    ChernoffTrace f(rho, sigma);
    ChernoffTrace g(sigma, rho);
    std::vector<double> v(101);
    for (int k = 0; k <= 100; ++k) {
        v[k] = f(k / 100.0);
        EXPECT_NEAR(v[k], g(1.0 - k / 100.0), 1e-10);
    }
    for (int k = 1; k < 100; ++k) {
        EXPECT_GE(v[k - 1] - 2 * v[k] + v[k + 1], -1e-8) << k;
    }
}

TEST(ChernoffTrace, rejects_non_density) {
    FockOperator bad = build_thermal(1.0, 1.0, 3);
    bad.matrix(1, 1) = -0.2;
    EXPECT_THROW(chernoff_trace(bad, bad, 0.5), DomainError);
}

TEST(QcbBrute, bounded_by_half_exponent) {
    FockOperator rho = apply_two_mode_squeeze(build_thermal(2.0, 1.0, 12), 0.4);
    FockOperator sigma = apply_local_phase(rho, 1.3);
    BruteQcb q = qcb_brute(rho, sigma);
    EXPECT_LE(q.q, chernoff_trace(rho, sigma, 0.5) + 1e-15);
    EXPECT_NEAR(q.s_star, 0.5, 2e-3);
}

TEST(QcbBrute, identical_states_report_half) {
    FockOperator s = build_thermal(2.0, 2.0, 8);
    BruteQcb q = qcb_brute(s, s);
    EXPECT_EQ(q.s_star, 0.5);
    EXPECT_NEAR(q.q, 1.0, 1e-12);
}

TEST(SingleCopyError, bounds) {
    FockOperator rho = apply_two_mode_squeeze(build_thermal(1.5, 1.0, 12), 0.6);
    FockOperator sigma = apply_local_phase(rho, kPi);
    EXPECT_NEAR(single_copy_error(rho, rho), 0.5, 1e-15);
    double p = single_copy_error(rho, sigma);
    EXPECT_GT(p, 0.0);
    EXPECT_LE(p, 0.5 * qcb_brute(rho, sigma).q);
}

TEST(Oracle, matches_gaussian_formula) {
    for (const OracleCase &c : default_oracle_grid()) {
        if (c.spec.nu1 > 2.0 || c.spec.nu2 > 2.0) {
            continue;
        }
        OracleComparison cmp = compare_with_oracle(c, 16);
        EXPECT_LT(std::abs(cmp.q_gaussian - cmp.q_fock), 1e-3);
        EXPECT_NEAR(cmp.s_fock, 0.5, 2e-3);
        EXPECT_NEAR(cmp.s_gaussian, 0.5, 2e-3);
    }
}

TEST(Oracle, cutoff_convergence) {
    double worst = 0.0;
    std::string where;
    for (const OracleCase &c : default_oracle_grid()) {
        double q12 = compare_with_oracle(c, 12).q_fock;
        double q16 = compare_with_oracle(c, 16).q_fock;
        if (std::abs(q12 - q16) > worst) {
            worst = std::abs(q12 - q16);
            where = to_string(c.spec.cls) + " nu=(" + std::to_string(c.spec.nu1) + "," + std::to_string(c.spec.nu2) +
                    ") p=" + std::to_string(c.spec.param) + " lambda=" + std::to_string(c.lambda);
        }
    }
    EXPECT_LT(worst, 1e-4) << "worst case " << where;
}
