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

#ifndef GDS_DISCRIMINATING_STRENGTH_H
#define GDS_DISCRIMINATING_STRENGTH_H

#include <vector>

#include "gds/class_state.h"
#include "gds/qcb.h"

namespace gds {

/// Throws InvalidLambdaError when lambda mod 2*pi lies within 1e-9 of 0.
void validate_lambda(double lambda);

/// Local phase angles, one per mode of A.
struct UnitarySetSpec {
    std::vector<double> lambdas;

    static UnitarySetSpec make(std::vector<double> lambdas);
    void validate() const;
};

enum class GdsMethod { ClosedForm, NumericOptimum };

struct GdsResult {
    double value;
    double theta_star;
    double x_star;
    double s_star;
    GdsMethod method;
};

struct GdsOptions {
    double x_max = 5.0;
    int theta_points = 64;
    int x_points = 33;
    /// Nelder-Mead is started from this many of the best grid points.
    int starts = 3;
    double diameter_tol = 1e-7;
    int max_evaluations = 5000;
    /// Grid evaluation threads. The result does not depend on this.
    int threads = 1;
};

/// U_A(theta, x) = R(theta) S1(x) R(lambda) S1(-x) R(-theta).
Eigen::Matrix2d local_phase_symplectic(double theta, double x, double lambda);

/// Inner s-minimisation at a fixed (theta, x) for a two-mode state with
/// partition (1, 1). Displacements are dropped, see gds_numeric.
QcbResult gds_inner(const GaussianState &state, double lambda, double theta, double x);

/// 1 - max over (theta, x) of min over s of Q_s for a two-mode state,
/// A being the first mode.
///
/// The phase shift is taken about the state's own centre on A, which
/// zeroes Delta_s; since Delta_s >= 0 that choice is optimal and makes the
/// result independent of the displacement.
GdsResult gds_numeric(const GaussianState &state, double lambda, const GdsOptions &options = {});

/// Closed forms for the squeezed and linear-mixed classes.
GdsResult gds_closed_form(const TwoModeClassState &spec, double lambda);

/// (Lambda_1/2(nu1) + Lambda_1/2(nu2)) / 2 and the difference counterpart.
double a_plus(double nu1, double nu2);
double a_minus(double nu1, double nu2);

/// Symmetric (a = b) standard-form states with |c| = |d|, written directly in (a, c).
double gds_symmetric_standard(double a, double c, StateClass cls, double lambda);

/// det[gamma^(1/2) + U~ gamma^(1/2) U~^T] for the two classes at (theta, x).
/// Does not depend on theta.
double f_half(const TwoModeClassState &spec, double lambda, double theta, double x);

/// True iff the cross-correlation block vanishes to 1e-10 (relative to the
/// largest covariance entry, floor 1).
bool theorem1_predicate(const GaussianState &state, double lambda, Partition partition);

}  // namespace gds

#endif
