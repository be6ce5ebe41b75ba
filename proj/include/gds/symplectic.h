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

#ifndef GDS_SYMPLECTIC_H
#define GDS_SYMPLECTIC_H

#include <span>

#include "gds/linalg.h"

namespace gds {

/// First and second moments of an n-mode Gaussian state.
///
/// Quadratures are interleaved as (x1, p1, ..., xn, pn) and the vacuum has
/// gamma = identity. Construction checks shape and symmetry only; the
/// uncertainty relation is checked separately by check_physical so that
/// unphysical inputs can still be diagnosed.
struct GaussianState {
    Matrix gamma;
    Vector xi;

    /// Validates shape (2n x 2n, xi of length 2n) and symmetry to 1e-12.
    /// An empty xi means zero displacement.
    static GaussianState from_covariance(const Matrix &gamma, const Vector &xi = Vector());
    static GaussianState vacuum(int n_modes);
    /// Thermal state with the given symplectic eigenvalues, one per mode.
    static GaussianState thermal(std::span<const double> nus);

    int n_modes() const { return static_cast<int>(gamma.rows() / 2); }

    /// 2n_A x 2n_A block of the first n_A modes.
    Matrix block_a(int n_a) const;
    /// Remaining modes.
    Matrix block_b(int n_a) const;
    /// Off-diagonal correlation block between the first n_A modes and the rest.
    Matrix block_off(int n_a) const;
};

struct SymplecticForm {
    int n_modes;
    Matrix matrix;
};

/// Direct sum of n copies of [[0, 1], [-1, 0]].
SymplecticForm make_symplectic_form(int n);

/// Shorthand for make_symplectic_form(n).matrix.
Matrix omega(int n);

/// True when s * Omega * s^T equals Omega to `tol` (relative).
bool is_symplectic(const Matrix &s, double tol = 1e-10);

/// Inverse of a symplectic matrix, -Omega s^T Omega. No inversion is performed.
Matrix symplectic_inverse(const Matrix &s);

struct PhysicalityReport {
    bool physical;
    /// Smallest eigenvalue of the Hermitian matrix gamma + i*Omega.
    double min_eigenvalue;
};

PhysicalityReport check_physical(const GaussianState &state);

/// Throws UnphysicalStateError unless check_physical passes.
void require_physical(const GaussianState &state);

/// Symplectic spectrum, descending. Requires a positive-definite covariance.
Vector symplectic_eigenvalues(const GaussianState &state);

/// gamma = s * (direct sum of nu_j * 1_2) * s^T.
struct WilliamsonDecomposition {
    Matrix s;
    Vector nu;

    Matrix reconstruct() const;
};

/// Williamson normal form through the canonical form of gamma^1/2 Omega gamma^1/2.
///
/// Each 2x2 block column of s is only defined up to a rotation. The rotation
/// is fixed so that, in the block's own first row (or the first row with
/// non-negligible weight), the second entry vanishes and the first is
/// positive. Inputs already in Williamson form with descending eigenvalues
/// return the exact identity.
WilliamsonDecomposition williamson(const GaussianState &state);
WilliamsonDecomposition williamson(const Matrix &gamma);

/// Heisenberg action r -> u r + eta of a Gaussian unitary.
struct GaussianUnitary {
    Matrix u;
    Vector eta;

    /// Checks symplecticity of u to 1e-10. An empty eta means zero.
    static GaussianUnitary make(const Matrix &u, const Vector &eta = Vector());
    static GaussianUnitary identity(int n_modes);

    int n_modes() const { return static_cast<int>(u.rows() / 2); }
    GaussianUnitary inverse() const;
};

/// xi -> u xi + eta, gamma -> u gamma u^T.
GaussianState apply_unitary(const GaussianState &state, const GaussianUnitary &unitary);

/// Direct sum of per-mode rotations R(lambda_j), zero displacement.
GaussianUnitary phase_unitary(std::span<const double> lambdas);

/// V R(lambdas) V^-1 with displacement (1 - U) eta_V.
GaussianUnitary conjugated_phase_unitary(const GaussianUnitary &v, std::span<const double> lambdas);

/// a (+) b acting on the concatenated modes.
GaussianUnitary direct_sum(const GaussianUnitary &a, const GaussianUnitary &b);

/// diag(e^x, e^-x).
Eigen::Matrix2d single_mode_squeezer(double x);

struct EulerAngles {
    double theta;
    double x;
    double theta_prime;
};

/// s = R(theta) diag(e^x, e^-x) R(theta').
///
/// Gauge: x >= 0; theta in [0, pi) when x > 0 (R(pi) = -1 commutes with
/// everything, so (theta + pi, theta' + pi) describes the same matrix);
/// theta' = 0 for pure rotations. Angles are reported in [0, 2*pi).
EulerAngles euler_decompose(const Eigen::Matrix2d &s);
Eigen::Matrix2d euler_compose(const EulerAngles &angles);

/// Local-symplectic normal form of a two-mode covariance matrix:
/// gamma_A = a 1, gamma_B = b 1, gamma_OFF = diag(c, d), with c >= 0 and |c| >= |d|.
struct TwoModeStandardForm {
    double a;
    double b;
    double c;
    double d;

    Matrix covariance() const;
};

/// Computed from the local invariants det(gamma_A), det(gamma_B),
/// det(gamma_OFF) and det(gamma).
TwoModeStandardForm two_mode_standard_form(const GaussianState &state);

/// Two-mode squeezer [[cosh r 1, sinh r sigma_3], [sinh r sigma_3, cosh r 1]].
Matrix two_mode_squeezer(double r);

/// Beam splitter [[cos phi 1, -sin phi 1], [sin phi 1, cos phi 1]].
Matrix beam_splitter(double phi);

struct BlockDiagonalization {
    /// Symplectic and orthogonal.
    Matrix m;
    /// Rotation angles in [0, 2*pi), ascending.
    Vector lambdas;
};

/// For w in Sp(2n) and O(2n), finds m in Sp(2n) and O(2n) with
/// m^T w m = direct sum of R(lambda_j).
///
/// Works in the (x..., p...) ordering, where w = [[A, -B], [B, A]] and
/// A + iB is unitary. Diagonalising that unitary and mapping its eigenbasis
/// back through K = (1/sqrt 2)[[1, i], [i, 1]] gives m.
BlockDiagonalization block_diagonalize_sympo(const Matrix &w);

}  // namespace gds

#endif
