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

#ifndef GDS_QCB_H
#define GDS_QCB_H

#include "gds/symplectic.h"

namespace gds {

/// Lambda_s(x) = ((x+1)^s + (x-1)^s) / ((x+1)^s - (x-1)^s), evaluated as
/// coth(s * artanh(1/x)). Exactly 1 at x = 1. Requires 0 < s <= 1, x >= 1.
double lambda_fn(double s, double x);

/// G_s(x) = 2^s / ((x+1)^s - (x-1)^s). Exactly 1 at x = 1.
double g_fn(double s, double x);

/// Symplectic eigenvalues within this distance of 1 are treated as exactly 1.
/// Lambda_s has an infinite slope at x = 1, so round-off in the spectrum of a
/// pure state would otherwise leak into Q_s at the 1e-7 level.
inline constexpr double kPureSnapTolerance = 1e-9;

/// The Gaussian operator rho^s / Tr[rho^s].
struct SExponentState {
    WilliamsonDecomposition base;
    double s;
    Matrix gamma_s;
    /// Tr[rho^s].
    double norm_factor;
};

SExponentState exponentiate(const WilliamsonDecomposition &w, double s);

struct Partition {
    int n_a;
    int n_b;
};

/// s -> Q_s exp(-Delta_s) for a state rho and sigma = U rho U^dagger, where
/// U = U_A (+) 1_B.
///
/// Works in the Williamson frame of rho: with O = S^-1 U~ S, the matrix in
/// both the determinant and Delta_s becomes D_s + O D_{1-s} O^T, so no
/// per-s products with S are needed.
class QcbObjective {
public:
    QcbObjective(const GaussianState &state, const GaussianUnitary &u_local, Partition partition);
    /// Reuses a Williamson decomposition of the state's covariance.
    QcbObjective(const WilliamsonDecomposition &w, const Vector &xi, const GaussianUnitary &u_local,
                 Partition partition);

    /// log Q_s, 0 < s < 1.
    double log_q(double s) const;
    /// Delta_s >= 0.
    double delta(double s) const;
    /// Q_s exp(-Delta_s).
    double value(double s) const;
    /// Same quantity built from S D_s S^T literally; for cross-checks.
    double value_direct(double s) const;

    const Vector &nu() const { return nu_; }

private:
    void init(const WilliamsonDecomposition &w, const Vector &xi, const GaussianUnitary &u_local,
              Partition partition);
    Matrix middle(double s) const;

    Matrix s_;
    Vector nu_;
    Matrix u_tilde_;
    Matrix o_;
    Vector delta_;
    Vector delta_frame_;
};

struct QcbResult {
    double q;
    double s_star;
};

/// min over s of the objective.
QcbResult minimize_qcb(const QcbObjective &objective);

/// Quantum Chernoff bound between rho and (U_A (+) 1_B) rho (U_A (+) 1_B)^dagger.
QcbResult qcb_local(const GaussianState &state, const GaussianUnitary &u_local, Partition partition);

/// U_A (+) 1_B with the displacement padded by zeros.
GaussianUnitary extend_local(const GaussianUnitary &u_local, Partition partition);

struct ProductMoments {
    ComplexMatrix gamma12;
    ComplexVector xi12;
};

/// Moments of the (non-Hermitian) Gaussian operator rho_1 rho_2.
ProductMoments product_gaussian_moments(const GaussianState &state1, const GaussianState &state2);

}  // namespace gds

#endif
