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

#include "gds/symplectic.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "gds/errors.h"

namespace gds {

namespace {

void require_even_square(const Matrix &m, const char *what) {
    if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
        throw ShapeError(std::string(what) + ": expected a non-empty 2n x 2n matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

Matrix symmetrized(const Matrix &m) {
    return 0.5 * (m + m.transpose());
}

// (x1, p1, ..., xn, pn) -> (x1, ..., xn, p1, ..., pn).
Matrix xp_permutation(int n) {
    Matrix p = Matrix::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        p(k, 2 * k) = 1.0;
        p(n + k, 2 * k + 1) = 1.0;
    }
    return p;
}

}  // namespace

GaussianState GaussianState::from_covariance(const Matrix &gamma, const Vector &xi) {
    require_even_square(gamma, "GaussianState");
    if (!gamma.allFinite()) {
        throw DomainError("GaussianState: covariance has non-finite entries");
    }
    if (relative_residual(gamma, gamma.transpose()) > 1e-12) {
        throw ShapeError("GaussianState: covariance is not symmetric");
    }
    GaussianState out;
    out.gamma = symmetrized(gamma);
    if (xi.size() == 0) {
        out.xi = Vector::Zero(gamma.rows());
    } else if (xi.size() != gamma.rows()) {
        throw ShapeError("GaussianState: displacement length " + std::to_string(xi.size()) +
                         " does not match covariance dimension " + std::to_string(gamma.rows()));
    } else {
        out.xi = xi;
    }
    return out;
}

GaussianState GaussianState::vacuum(int n_modes) {
    if (n_modes <= 0) {
        throw ShapeError("GaussianState::vacuum: need at least one mode");
    }
    return {Matrix::Identity(2 * n_modes, 2 * n_modes), Vector::Zero(2 * n_modes)};
}

GaussianState GaussianState::thermal(std::span<const double> nus) {
    if (nus.empty()) {
        throw ShapeError("GaussianState::thermal: need at least one mode");
    }
    int n = static_cast<int>(nus.size());
    Vector diag(2 * n);
    for (int k = 0; k < n; ++k) {
        diag(2 * k) = nus[k];
        diag(2 * k + 1) = nus[k];
    }
    return {diag.asDiagonal(), Vector::Zero(2 * n)};
}

Matrix GaussianState::block_a(int n_a) const {
    return gamma.topLeftCorner(2 * n_a, 2 * n_a);
}

Matrix GaussianState::block_b(int n_a) const {
    Eigen::Index rest = gamma.rows() - 2 * n_a;
    return gamma.bottomRightCorner(rest, rest);
}

Matrix GaussianState::block_off(int n_a) const {
    return gamma.topRightCorner(2 * n_a, gamma.cols() - 2 * n_a);
}

SymplecticForm make_symplectic_form(int n) {
    if (n <= 0) {
        throw ShapeError("make_symplectic_form: need at least one mode");
    }
    Matrix m = Matrix::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        m(2 * k, 2 * k + 1) = 1.0;
        m(2 * k + 1, 2 * k) = -1.0;
    }
    return {n, m};
}

Matrix omega(int n) {
    return make_symplectic_form(n).matrix;
}

bool is_symplectic(const Matrix &s, double tol) {
    if (s.rows() != s.cols() || s.rows() % 2 != 0 || s.rows() == 0) {
        return false;
    }
    Matrix w = omega(static_cast<int>(s.rows() / 2));
    // Scale by |s|^2 so that large squeezing does not fail on round-off alone.
    double scale = std::max(1.0, max_abs(s) * max_abs(s));
    return max_abs(s * w * s.transpose() - w) <= tol * scale;
}

Matrix symplectic_inverse(const Matrix &s) {
    require_even_square(s, "symplectic_inverse");
    Matrix w = omega(static_cast<int>(s.rows() / 2));
    return -w * s.transpose() * w;
}

PhysicalityReport check_physical(const GaussianState &state) {
    require_even_square(state.gamma, "check_physical");
    if (relative_residual(state.gamma, state.gamma.transpose()) > 1e-12) {
        throw ShapeError("check_physical: covariance is not symmetric");
    }
    int n = state.n_modes();
    ComplexMatrix h = state.gamma.cast<std::complex<double>>();
    h += std::complex<double>(0.0, 1.0) * omega(n).cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) {
        throw NumericError("check_physical: eigen-solver failed");
    }
    double lo = eig.eigenvalues().minCoeff();
    return {lo >= -1e-10, lo};
}

void require_physical(const GaussianState &state) {
    PhysicalityReport r = check_physical(state);
    if (!r.physical) {
        throw UnphysicalStateError(
            "state violates the uncertainty relation: min eigenvalue of gamma + i*Omega is " +
                std::to_string(r.min_eigenvalue),
            r.min_eigenvalue);
    }
}

Vector symplectic_eigenvalues(const GaussianState &state) {
    require_even_square(state.gamma, "symplectic_eigenvalues");
    int n = state.n_modes();
    // i * gamma^1/2 Omega gamma^1/2 is Hermitian and similar to i Omega gamma.
    Matrix root = spd_sqrt(state.gamma);
    Matrix a = root * omega(n) * root;
    ComplexMatrix h = std::complex<double>(0.0, 1.0) * a.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) {
        throw NumericError("symplectic_eigenvalues: eigen-solver failed");
    }
    // Ascending; the top n are the positive half of the +-nu pairs.
    Vector w = eig.eigenvalues();
    Vector nu(n);
    for (int k = 0; k < n; ++k) {
        nu(k) = w(2 * n - 1 - k);
    }
    return nu;
}

Matrix WilliamsonDecomposition::reconstruct() const {
    Vector d(2 * nu.size());
    for (Eigen::Index k = 0; k < nu.size(); ++k) {
        d(2 * k) = nu(k);
        d(2 * k + 1) = nu(k);
    }
    return s * d.asDiagonal() * s.transpose();
}

WilliamsonDecomposition williamson(const GaussianState &state) {
    return williamson(state.gamma);
}

WilliamsonDecomposition williamson(const Matrix &gamma_in) {
    require_even_square(gamma_in, "williamson");
    if (relative_residual(gamma_in, gamma_in.transpose()) > 1e-12) {
        throw ShapeError("williamson: covariance is not symmetric");
    }
    const Matrix gamma = symmetrized(gamma_in);
    const int n = static_cast<int>(gamma.rows() / 2);
    const Matrix root = spd_sqrt(gamma);
    const Matrix a = root * omega(n) * root;

    Eigen::RealSchur<Matrix> schur(a);
    if (schur.info() != Eigen::Success) {
        throw NumericError("williamson: real Schur iteration did not converge");
    }
    Matrix o = schur.matrixU();
    const Matrix &t = schur.matrixT();
    for (int j = 0; j < n; ++j) {
        if (std::abs(t(2 * j + 1, 2 * j)) == 0.0) {
            throw NumericError("williamson: canonical form has a real eigenvalue");
        }
        // Orient the block as nu * [[0, 1], [-1, 0]].
        if (t(2 * j, 2 * j + 1) < 0.0) {
            o.col(2 * j).swap(o.col(2 * j + 1));
        }
    }
    Matrix tt = o.transpose() * a * o;
    std::vector<double> nus(n);
    for (int j = 0; j < n; ++j) {
        nus[j] = 0.5 * (tt(2 * j, 2 * j + 1) - tt(2 * j + 1, 2 * j));
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int l, int r) { return nus[l] > nus[r]; });

    Matrix s(2 * n, 2 * n);
    Vector nu(n);
    for (int j = 0; j < n; ++j) {
        int src = order[j];
        double v = nus[src];
        if (!(v > 0.0)) {
            throw NumericError("williamson: non-positive symplectic eigenvalue");
        }
        nu(j) = v;
        double scale = 1.0 / std::sqrt(v);
        s.col(2 * j) = root * o.col(2 * src) * scale;
        s.col(2 * j + 1) = root * o.col(2 * src + 1) * scale;
    }

    // Fix the rotation freedom inside each block column.
    const double weight_floor = 1e-8 * max_abs(s);
    for (int j = 0; j < n; ++j) {
        Eigen::Index row = 2 * j;
        if (std::hypot(s(row, 2 * j), s(row, 2 * j + 1)) <= weight_floor) {
            for (row = 0; row < s.rows(); ++row) {
                if (std::hypot(s(row, 2 * j), s(row, 2 * j + 1)) > weight_floor) {
                    break;
                }
            }
        }
        double alpha = std::atan2(s(row, 2 * j + 1), s(row, 2 * j));
        double c = std::cos(alpha);
        double sn = std::sin(alpha);
        Vector c0 = s.col(2 * j);
        Vector c1 = s.col(2 * j + 1);
        s.col(2 * j) = c * c0 + sn * c1;
        s.col(2 * j + 1) = -sn * c0 + c * c1;
        s(row, 2 * j + 1) = 0.0;
    }

    WilliamsonDecomposition out{s, nu};
    Matrix id = Matrix::Identity(2 * n, 2 * n);
    if (max_abs(s - id) < 1e-8) {
        WilliamsonDecomposition snapped{id, nu};
        // Exact Williamson form in, exact out.
        WilliamsonDecomposition exact{id, gamma.diagonal()(Eigen::seq(0, 2 * n - 1, 2))};
        if (max_abs(exact.reconstruct() - gamma) == 0.0) {
            return exact;
        }
        if (relative_residual(snapped.reconstruct(), gamma) <= 1e-12) {
            return snapped;
        }
    }
    return out;
}

GaussianUnitary GaussianUnitary::make(const Matrix &u, const Vector &eta) {
    require_even_square(u, "GaussianUnitary");
    if (!is_symplectic(u, 1e-10)) {
        throw DomainError("GaussianUnitary: matrix is not symplectic");
    }
    GaussianUnitary out{u, eta};
    if (eta.size() == 0) {
        out.eta = Vector::Zero(u.rows());
    } else if (eta.size() != u.rows()) {
        throw ShapeError("GaussianUnitary: displacement length does not match matrix");
    }
    return out;
}

GaussianUnitary GaussianUnitary::identity(int n_modes) {
    if (n_modes <= 0) {
        throw ShapeError("GaussianUnitary::identity: need at least one mode");
    }
    return {Matrix::Identity(2 * n_modes, 2 * n_modes), Vector::Zero(2 * n_modes)};
}

GaussianUnitary GaussianUnitary::inverse() const {
    Matrix inv = symplectic_inverse(u);
    return {inv, -inv * eta};
}

GaussianState apply_unitary(const GaussianState &state, const GaussianUnitary &unitary) {
    if (unitary.u.rows() != state.gamma.rows()) {
        throw ShapeError("apply_unitary: unitary acts on " + std::to_string(unitary.n_modes()) +
                         " modes, state has " + std::to_string(state.n_modes()));
    }
    GaussianState out;
    out.gamma = symmetrized(unitary.u * state.gamma * unitary.u.transpose());
    out.xi = unitary.u * state.xi + unitary.eta;
    return out;
}

GaussianUnitary phase_unitary(std::span<const double> lambdas) {
    if (lambdas.empty()) {
        throw ShapeError("phase_unitary: need at least one mode");
    }
    int n = static_cast<int>(lambdas.size());
    Matrix u = Matrix::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        u.block<2, 2>(2 * k, 2 * k) = rotation(lambdas[k]);
    }
    return {u, Vector::Zero(2 * n)};
}

GaussianUnitary conjugated_phase_unitary(const GaussianUnitary &v, std::span<const double> lambdas) {
    if (static_cast<int>(lambdas.size()) != v.n_modes()) {
        throw ShapeError("conjugated_phase_unitary: one angle per mode is required");
    }
    Matrix r = phase_unitary(lambdas).u;
    Matrix u = v.u * r * symplectic_inverse(v.u);
    Vector eta = v.eta - u * v.eta;
    return {u, eta};
}

GaussianUnitary direct_sum(const GaussianUnitary &a, const GaussianUnitary &b) {
    Eigen::Index na = a.u.rows();
    Eigen::Index nb = b.u.rows();
    GaussianUnitary out{Matrix::Zero(na + nb, na + nb), Vector(na + nb)};
    out.u.topLeftCorner(na, na) = a.u;
    out.u.bottomRightCorner(nb, nb) = b.u;
    out.eta << a.eta, b.eta;
    return out;
}

Eigen::Matrix2d single_mode_squeezer(double x) {
    Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
    m(0, 0) = std::exp(x);
    m(1, 1) = std::exp(-x);
    return m;
}

EulerAngles euler_decompose(const Eigen::Matrix2d &s) {
    if (!s.allFinite()) {
        throw DomainError("euler_decompose: non-finite entries");
    }
    if (std::abs(s.determinant() - 1.0) > 1e-10 * std::max(1.0, s.squaredNorm())) {
        throw DomainError("euler_decompose: matrix is not symplectic (det != 1)");
    }
    Eigen::JacobiSVD<Eigen::Matrix2d> svd(s, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix2d u = svd.matrixU();
    Eigen::Matrix2d v = svd.matrixV();
    if (u.determinant() < 0.0) {
        u.col(1) *= -1.0;
        v.col(1) *= -1.0;
    }
    double x = std::log(svd.singularValues()(0));
    if (!(x > 1e-12)) {
        return {wrap_angle(std::atan2(s(1, 0), s(0, 0))), 0.0, 0.0};
    }
    constexpr double pi = std::numbers::pi;
    double theta = wrap_angle(std::atan2(u(1, 0), u(0, 0)));
    // v^T = R(theta'), so theta' is the angle of v^T's first column.
    double theta_p = std::atan2(v(0, 1), v(0, 0));
    if (theta >= pi) {
        theta -= pi;
        theta_p += pi;
    }
    return {theta, x, wrap_angle(theta_p)};
}

Eigen::Matrix2d euler_compose(const EulerAngles &angles) {
    return rotation(angles.theta) * single_mode_squeezer(angles.x) * rotation(angles.theta_prime);
}

Matrix TwoModeStandardForm::covariance() const {
    Matrix g = Matrix::Zero(4, 4);
    g(0, 0) = a;
    g(1, 1) = a;
    g(2, 2) = b;
    g(3, 3) = b;
    g(0, 2) = g(2, 0) = c;
    g(1, 3) = g(3, 1) = d;
    return g;
}

TwoModeStandardForm two_mode_standard_form(const GaussianState &state) {
    if (state.gamma.rows() != 4 || state.gamma.cols() != 4) {
        throw ShapeError("two_mode_standard_form: expected a two-mode (4x4) covariance");
    }
    require_physical(state);
    const Matrix &g = state.gamma;
    double det_a = g.block<2, 2>(0, 0).determinant();
    double det_b = g.block<2, 2>(2, 2).determinant();
    double det_c = g.block<2, 2>(0, 2).determinant();
    if (!(det_a > 0.0) || !(det_b > 0.0)) {
        throw DomainError("two_mode_standard_form: local blocks are not positive definite");
    }
    double a = std::sqrt(det_a);
    double b = std::sqrt(det_b);
    // sqrt(a) gamma_A^{-1/2} is symplectic and takes gamma_A to a*1; the
    // singular values of the normalized off block are then |c| and |d|.
    // The quadratic through det(gamma) loses half the digits when |c| ~ |d|.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> ea(Eigen::Matrix2d(g.block<2, 2>(0, 0)));
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eb(Eigen::Matrix2d(g.block<2, 2>(2, 2)));
    Eigen::Matrix2d k = std::sqrt(a * b) * ea.operatorInverseSqrt() * Eigen::Matrix2d(g.block<2, 2>(0, 2)) *
                        eb.operatorInverseSqrt();
    Eigen::Vector2d sv = Eigen::JacobiSVD<Eigen::Matrix2d>(k).singularValues();
    double c = sv(0);
    double d = det_c < 0.0 ? -sv(1) : sv(1);
    if (det_c == 0.0) {
        d = 0.0;
    }
    return {a, b, c, d};
}

Matrix two_mode_squeezer(double r) {
    double ch = std::cosh(r);
    double sh = std::sinh(r);
    Matrix s(4, 4);
    s << ch, 0, sh, 0,
         0, ch, 0, -sh,
         sh, 0, ch, 0,
         0, -sh, 0, ch;
    return s;
}

Matrix beam_splitter(double phi) {
    double c = std::cos(phi);
    double sn = std::sin(phi);
    Matrix s(4, 4);
    s << c, 0, -sn, 0,
         0, c, 0, -sn,
         sn, 0, c, 0,
         0, sn, 0, c;
    return s;
}

BlockDiagonalization block_diagonalize_sympo(const Matrix &w) {
    require_even_square(w, "block_diagonalize_sympo");
    const int n = static_cast<int>(w.rows() / 2);
    Matrix id = Matrix::Identity(2 * n, 2 * n);
    if (max_abs(w * w.transpose() - id) > 1e-10 || !is_symplectic(w, 1e-10)) {
        throw DomainError("block_diagonalize_sympo: matrix is not symplectic and orthogonal");
    }
    using C = std::complex<double>;
    const Matrix p = xp_permutation(n);
    const Matrix wxp = p * w * p.transpose();
    ComplexMatrix u(n, n);
    u.real() = wxp.topLeftCorner(n, n);
    u.imag() = wxp.bottomLeftCorner(n, n);

    Eigen::ComplexSchur<ComplexMatrix> schur(u);
    if (schur.info() != Eigen::Success) {
        throw NumericError("block_diagonalize_sympo: complex Schur iteration did not converge");
    }
    const ComplexMatrix &q = schur.matrixU();
    const ComplexMatrix &t = schur.matrixT();
    std::vector<double> angles(n);
    for (int j = 0; j < n; ++j) {
        angles[j] = wrap_angle(std::arg(t(j, j)));
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int l, int r) { return angles[l] < angles[r]; });

    ComplexMatrix mc = ComplexMatrix::Zero(2 * n, 2 * n);
    Vector lambdas(n);
    for (int j = 0; j < n; ++j) {
        mc.block(0, j, n, 1) = q.col(order[j]);
        mc.block(n, n + j, n, 1) = q.col(order[j]).conjugate();
        lambdas(j) = angles[order[j]];
    }
    const double h = 1.0 / std::numbers::sqrt2;
    ComplexMatrix k(2 * n, 2 * n);
    ComplexMatrix kinv(2 * n, 2 * n);
    ComplexMatrix one = ComplexMatrix::Identity(n, n);
    k << h * one, C(0.0, h) * one, C(0.0, h) * one, h * one;
    kinv << h * one, C(0.0, -h) * one, C(0.0, -h) * one, h * one;
    ComplexMatrix mxp = kinv * mc * k;
    if (mxp.imag().cwiseAbs().maxCoeff() > 1e-8) {
        throw NumericError("block_diagonalize_sympo: basis change is not real");
    }
    Matrix m = p.transpose() * mxp.real() * p;
    return {m, lambdas};
}

}  // namespace gds
