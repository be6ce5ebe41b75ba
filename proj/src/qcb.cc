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

#include "gds/qcb.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "gds/errors.h"
#include "gds/optimize.h"

namespace gds {

namespace {

void check_args(double s, double x, const char *what) {
    if (!(s > 0.0) || !(s <= 1.0)) {
        throw DomainError(std::string(what) + ": s must lie in (0, 1], got " + std::to_string(s));
    }
    if (!(x >= 1.0 - 1e-10)) {
        throw DomainError(std::string(what) + ": x must be >= 1, got " + std::to_string(x));
    }
}

Vector snapped(const Vector &nu) {
    Vector out = nu;
    for (Eigen::Index k = 0; k < out.size(); ++k) {
        if (std::abs(out(k) - 1.0) <= kPureSnapTolerance) {
            out(k) = 1.0;
        }
    }
    return out;
}

Vector doubled(const Vector &v) {
    Vector out(2 * v.size());
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        out(2 * k) = v(k);
        out(2 * k + 1) = v(k);
    }
    return out;
}

Vector lambda_diag(double s, const Vector &nu) {
    Vector out(nu.size());
    for (Eigen::Index k = 0; k < nu.size(); ++k) {
        out(k) = lambda_fn(s, nu(k));
    }
    return doubled(out);
}

void check_open(double s) {
    if (!(s > 0.0) || !(s < 1.0)) {
        throw DomainError("QcbObjective: s must lie in (0, 1), got " + std::to_string(s));
    }
}

}  // namespace

double lambda_fn(double s, double x) {
    check_args(s, x, "lambda_fn");
    if (x <= 1.0) {
        return 1.0;
    }
    if (s == 1.0) {
        return x;
    }
    return 1.0 / std::tanh(s * std::atanh(1.0 / x));
}

double g_fn(double s, double x) {
    check_args(s, x, "g_fn");
    if (x <= 1.0) {
        return 1.0;
    }
    // (x+1)^s (1 - e^{-sL}), L = log((x+1)/(x-1)).
    double l = std::log((x + 1.0) / (x - 1.0));
    double denom = std::pow(x + 1.0, s) * -std::expm1(-s * l);
    return std::pow(2.0, s) / denom;
}

SExponentState exponentiate(const WilliamsonDecomposition &w, double s) {
    check_args(s, 1.0, "exponentiate");
    Vector nu = snapped(w.nu);
    double norm = 1.0;
    for (Eigen::Index k = 0; k < nu.size(); ++k) {
        norm *= g_fn(s, nu(k));
    }
    Matrix gs = w.s * lambda_diag(s, nu).asDiagonal() * w.s.transpose();
    return {w, s, 0.5 * (gs + gs.transpose()), norm};
}

GaussianUnitary extend_local(const GaussianUnitary &u_local, Partition partition) {
    if (partition.n_a <= 0 || partition.n_b < 0) {
        throw ShapeError("extend_local: invalid partition");
    }
    if (u_local.n_modes() != partition.n_a) {
        throw ShapeError("extend_local: local unitary acts on " + std::to_string(u_local.n_modes()) +
                         " modes, partition has n_A = " + std::to_string(partition.n_a));
    }
    if (partition.n_b == 0) {
        return u_local;
    }
    return direct_sum(u_local, GaussianUnitary::identity(partition.n_b));
}

QcbObjective::QcbObjective(const GaussianState &state, const GaussianUnitary &u_local, Partition partition) {
    require_physical(state);
    init(williamson(state), state.xi, u_local, partition);
}

QcbObjective::QcbObjective(const WilliamsonDecomposition &w, const Vector &xi, const GaussianUnitary &u_local,
                           Partition partition) {
    init(w, xi, u_local, partition);
}

void QcbObjective::init(const WilliamsonDecomposition &w, const Vector &xi, const GaussianUnitary &u_local,
                        Partition partition) {
    if (partition.n_a + partition.n_b != w.nu.size()) {
        throw ShapeError("QcbObjective: partition does not match the number of modes");
    }
    if (xi.size() != w.s.rows()) {
        throw ShapeError("QcbObjective: displacement length does not match covariance");
    }
    GaussianUnitary ext = extend_local(u_local, partition);
    s_ = w.s;
    nu_ = snapped(w.nu);
    u_tilde_ = ext.u;
    Matrix s_inv = symplectic_inverse(s_);
    o_ = s_inv * u_tilde_ * s_;
    // Displacement of U rho U^dagger relative to rho.
    delta_ = u_tilde_ * xi + ext.eta - xi;
    delta_frame_ = s_inv * delta_;
}

Matrix QcbObjective::middle(double s) const {
    Vector ds = lambda_diag(s, nu_);
    Vector dt = lambda_diag(1.0 - s, nu_);
    Matrix m = o_ * dt.asDiagonal() * o_.transpose();
    m.diagonal() += ds;
    return 0.5 * (m + m.transpose());
}

double QcbObjective::log_q(double s) const {
    check_open(s);
    double acc = 0.0;
    for (Eigen::Index k = 0; k < nu_.size(); ++k) {
        acc += std::log(lambda_fn(s, nu_(k)) + lambda_fn(1.0 - s, nu_(k)));
    }
    return acc - 0.5 * log_abs_det(middle(s));
}

double QcbObjective::delta(double s) const {
    check_open(s);
    if (delta_frame_.cwiseAbs().maxCoeff() == 0.0) {
        return 0.0;
    }
    Eigen::LDLT<Matrix> ldlt(middle(s));
    if (ldlt.info() != Eigen::Success) {
        throw NumericError("QcbObjective: singular matrix in Delta_s");
    }
    return delta_frame_.dot(ldlt.solve(delta_frame_));
}

double QcbObjective::value(double s) const {
    return std::exp(log_q(s) - delta(s));
}

double QcbObjective::value_direct(double s) const {
    check_open(s);
    Matrix gs = s_ * lambda_diag(s, nu_).asDiagonal() * s_.transpose();
    Matrix gt = s_ * lambda_diag(1.0 - s, nu_).asDiagonal() * s_.transpose();
    Matrix m = gs + u_tilde_ * gt * u_tilde_.transpose();
    m = 0.5 * (m + m.transpose());
    double num = 1.0;
    for (Eigen::Index k = 0; k < nu_.size(); ++k) {
        num *= lambda_fn(s, nu_(k)) + lambda_fn(1.0 - s, nu_(k));
    }
    double q = num / std::sqrt(m.determinant());
    double d = delta_.dot(m.ldlt().solve(delta_));
    return q * std::exp(-d);
}

QcbResult minimize_qcb(const QcbObjective &objective) {
    ScalarMinimum m = minimize_over_unit_interval([&](double s) { return objective.value(s); });
    return {std::clamp(m.f, 0.0, 1.0), m.x};
}

QcbResult qcb_local(const GaussianState &state, const GaussianUnitary &u_local, Partition partition) {
    QcbObjective objective(state, u_local, partition);
    return minimize_qcb(objective);
}

ProductMoments product_gaussian_moments(const GaussianState &state1, const GaussianState &state2) {
    if (state1.gamma.rows() != state2.gamma.rows()) {
        throw ShapeError("product_gaussian_moments: states have different mode counts");
    }
    using C = std::complex<double>;
    int n = state1.n_modes();
    ComplexMatrix iw = C(0.0, 1.0) * omega(n).cast<C>();
    ComplexMatrix g1 = state1.gamma.cast<C>();
    ComplexMatrix g2 = state2.gamma.cast<C>();
    Eigen::FullPivLU<Matrix> lu(state1.gamma + state2.gamma);
    if (!lu.isInvertible()) {
        throw NumericError("product_gaussian_moments: gamma_1 + gamma_2 is singular");
    }
    ComplexMatrix inv = lu.inverse().cast<C>();
    ProductMoments out;
    out.gamma12 = -iw + (g2 + iw) * inv * (g1 + iw);
    ComplexVector x1 = state1.xi.cast<C>();
    ComplexVector x2 = state2.xi.cast<C>();
    out.xi12 = x1 - (g1 - iw) * inv * (x1 - x2);
    return out;
}

}  // namespace gds
