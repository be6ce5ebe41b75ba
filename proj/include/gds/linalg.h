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

#ifndef GDS_LINALG_H
#define GDS_LINALG_H

#include <Eigen/Dense>

namespace gds {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Largest absolute entry; zero for empty matrices.
double max_abs(const Matrix &m);

/// Max-entry distance between a and b, divided by the larger operand's max entry.
/// The denominator never drops below `floor`.
double relative_residual(const Matrix &a, const Matrix &b, double floor = 1e-12);

/// True when relative_residual(a, b) <= tol.
bool approx_equal(const Matrix &a, const Matrix &b, double tol);

/// log|det m| via partial-pivot LU. Throws NumericError if a pivot vanishes.
double log_abs_det(const Matrix &m);

/// Principal square root of a symmetric positive-definite matrix.
/// Throws DomainError if an eigenvalue is not strictly positive.
Matrix spd_sqrt(const Matrix &m);

/// Two-dimensional rotation by angle t.
Eigen::Matrix2d rotation(double t);

/// Reduces an angle to [0, 2*pi).
double wrap_angle(double t);

}  // namespace gds

#endif
