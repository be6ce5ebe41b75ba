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

#include "gds/linalg.h"

#include <cmath>
#include <numbers>

#include "gds/errors.h"

namespace gds {

double max_abs(const Matrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double relative_residual(const Matrix &a, const Matrix &b, double floor) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("relative_residual: operand shapes differ");
    }
    double scale = std::max({max_abs(a), max_abs(b), floor});
    return max_abs(a - b) / scale;
}

bool approx_equal(const Matrix &a, const Matrix &b, double tol) {
    return relative_residual(a, b) <= tol;
}

double log_abs_det(const Matrix &m) {
    Eigen::PartialPivLU<Matrix> lu(m);
    const Matrix &packed = lu.matrixLU();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < packed.rows(); ++i) {
        double pivot = std::abs(packed(i, i));
        if (!(pivot > 0.0) || !std::isfinite(pivot)) {
            throw NumericError("log_abs_det: singular matrix");
        }
        acc += std::log(pivot);
    }
    return acc;
}

Matrix spd_sqrt(const Matrix &m) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
    if (eig.info() != Eigen::Success) {
        throw NumericError("spd_sqrt: eigen-solver failed");
    }
    const Vector &w = eig.eigenvalues();
    if (w.minCoeff() <= 0.0) {
        throw DomainError("spd_sqrt: matrix is not positive definite (min eigenvalue " +
                          std::to_string(w.minCoeff()) + ")");
    }
    const Matrix &v = eig.eigenvectors();
    return v * w.cwiseSqrt().asDiagonal() * v.transpose();
}

Eigen::Matrix2d rotation(double t) {
    Eigen::Matrix2d r;
    double c = std::cos(t);
    double s = std::sin(t);
    r << c, -s, s, c;
    return r;
}

double wrap_angle(double t) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(t, two_pi);
    if (w < 0.0) {
        w += two_pi;
    }
    if (w >= two_pi) {
        w = 0.0;
    }
    return w;
}

}  // namespace gds
