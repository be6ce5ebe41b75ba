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

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "gds/errors.h"
#include "gds/optimize.h"

namespace gds {

namespace {

using C = std::complex<double>;

void require_cutoff(int cutoff) {
    if (cutoff < 2) {
        throw DomainError("Fock cutoff must be >= 2, got " + std::to_string(cutoff));
    }
}

void require_operator(const FockOperator &op) {
    require_cutoff(op.cutoff);
    Eigen::Index dim = static_cast<Eigen::Index>(op.cutoff) * op.cutoff;
    if (op.matrix.rows() != dim || op.matrix.cols() != dim) {
        throw ShapeError("FockOperator: matrix is not cutoff^2 x cutoff^2");
    }
}

// One conserved-quantity block of a two-mode generator: the basis states
// (m, n) and the real antisymmetric generator restricted to them.
struct Block {
    std::vector<std::pair<int, int>> states;
    Matrix generator;
};

// Restriction of the padded-space unitary to the cutoff, assembled from
// blocks whose exponentials are taken independently.
Matrix cutoff_unitary(const std::vector<Block> &blocks, int cutoff) {
    int dim = cutoff * cutoff;
    Matrix v = Matrix::Zero(dim, dim);
    for (const Block &b : blocks) {
        Matrix u = b.generator.exp();
        for (std::size_t i = 0; i < b.states.size(); ++i) {
            auto [mi, ni] = b.states[i];
            if (mi >= cutoff || ni >= cutoff) {
                continue;
            }
            for (std::size_t j = 0; j < b.states.size(); ++j) {
                auto [mj, nj] = b.states[j];
                if (mj >= cutoff || nj >= cutoff) {
                    continue;
                }
                v(mi * cutoff + ni, mj * cutoff + nj) = u(i, j);
            }
        }
    }
    return v;
}

FockOperator conjugate(const FockOperator &op, const Matrix &v) {
    FockOperator out{op.cutoff, ComplexMatrix(), 0.0};
    ComplexMatrix vc = v.cast<C>();
    out.matrix = vc * op.matrix * vc.adjoint();
    out.matrix = 0.5 * (out.matrix + out.matrix.adjoint());
    out.deficit = 1.0 - out.trace();
    return out;
}

}  // namespace

FockOperator build_thermal(double nu1, double nu2, int cutoff) {
    require_cutoff(cutoff);
    if (!(nu1 >= 1.0) || !(nu2 >= 1.0) || !std::isfinite(nu1) || !std::isfinite(nu2)) {
        throw DomainError("build_thermal: nu must be finite and >= 1");
    }
    auto weights = [cutoff](double nu) {
        double nbar = 0.5 * (nu - 1.0);
        Vector p(cutoff);
        double ratio = nbar / (nbar + 1.0);
        p(0) = 1.0 / (nbar + 1.0);
        for (int k = 1; k < cutoff; ++k) {
            p(k) = p(k - 1) * ratio;
        }
        return p;
    };
    Vector pa = weights(nu1);
    Vector pb = weights(nu2);
    int dim = cutoff * cutoff;
    FockOperator out{cutoff, ComplexMatrix::Zero(dim, dim), 0.0};
    for (int m = 0; m < cutoff; ++m) {
        for (int n = 0; n < cutoff; ++n) {
            out.matrix(m * cutoff + n, m * cutoff + n) = pa(m) * pb(n);
        }
    }
    out.deficit = 1.0 - pa.sum() * pb.sum();
    return out;
}

FockOperator apply_two_mode_squeeze(const FockOperator &op, double r) {
    require_operator(op);
    if (!std::isfinite(r)) {
        throw DomainError("apply_two_mode_squeeze: r must be finite");
    }
    const int pad = 3 * op.cutoff;
    std::vector<Block> blocks;
    // Blocks of fixed k = n_a - n_b that touch the cutoff.
    for (int k = -(op.cutoff - 1); k <= op.cutoff - 1; ++k) {
        Block b;
        for (int n = std::max(0, -k); n < pad && n + k < pad; ++n) {
            b.states.emplace_back(n + k, n);
        }
        int size = static_cast<int>(b.states.size());
        b.generator = Matrix::Zero(size, size);
        for (int t = 0; t + 1 < size; ++t) {
            auto [m, n] = b.states[t];
            double amp = r * std::sqrt(static_cast<double>(m + 1) * (n + 1));
            b.generator(t + 1, t) = amp;
            b.generator(t, t + 1) = -amp;
        }
        blocks.push_back(std::move(b));
    }
    return conjugate(op, cutoff_unitary(blocks, op.cutoff));
}

FockOperator apply_beam_splitter(const FockOperator &op, double phi) {
    require_operator(op);
    if (!std::isfinite(phi)) {
        throw DomainError("apply_beam_splitter: phi must be finite");
    }
    const int d = op.cutoff;
    std::vector<Block> blocks;
    // n_a + n_b is conserved; a block with total N is closed once both modes
    // may hold N photons, so no padding is needed beyond 2d - 2.
    for (int total = 0; total <= 2 * d - 2; ++total) {
        Block b;
        for (int m = 0; m <= total; ++m) {
            b.states.emplace_back(m, total - m);
        }
        int size = total + 1;
        b.generator = Matrix::Zero(size, size);
        for (int m = 0; m + 1 < size; ++m) {
            // -phi a^dagger b maps (m, N-m) to (m+1, N-m-1).
            double amp = phi * std::sqrt(static_cast<double>(m + 1) * (total - m));
            b.generator(m + 1, m) = -amp;
            b.generator(m, m + 1) = amp;
        }
        blocks.push_back(std::move(b));
    }
    return conjugate(op, cutoff_unitary(blocks, d));
}

FockOperator apply_local_phase(const FockOperator &op, double lambda) {
    require_operator(op);
    const int d = op.cutoff;
    FockOperator out = op;
    for (int i = 0; i < d * d; ++i) {
        int mi = i / d;
        for (int j = 0; j < d * d; ++j) {
            int mj = j / d;
            if (mi != mj) {
                out.matrix(i, j) *= std::polar(1.0, lambda * (mi - mj));
            }
        }
    }
    return out;
}

double mean_photon_number(const FockOperator &op) {
    require_operator(op);
    const int d = op.cutoff;
    double acc = 0.0;
    for (int i = 0; i < d * d; ++i) {
        acc += op.matrix(i, i).real() * (i / d + i % d);
    }
    return acc;
}

namespace {

void spectrum(const FockOperator &op, Vector &w, ComplexMatrix &v) {
    require_operator(op);
    ComplexMatrix h = 0.5 * (op.matrix + op.matrix.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
    if (eig.info() != Eigen::Success) {
        throw NumericError("chernoff_trace: eigen-solver failed");
    }
    w = eig.eigenvalues();
    if (w.minCoeff() < -1e-10) {
        throw DomainError("chernoff_trace: operator has eigenvalue " + std::to_string(w.minCoeff()) +
                          ", not a density matrix");
    }
    for (Eigen::Index k = 0; k < w.size(); ++k) {
        if (w(k) < 1e-14) {
            w(k) = 0.0;
        }
    }
    double total = w.sum();
    if (!(total > 0.0)) {
        throw DomainError("chernoff_trace: operator has zero trace");
    }
    w /= total;
    v = eig.eigenvectors();
}

}  // namespace

ChernoffTrace::ChernoffTrace(const FockOperator &rho, const FockOperator &sigma) {
    if (rho.cutoff != sigma.cutoff) {
        throw ShapeError("chernoff_trace: operators have different cutoffs");
    }
    ComplexMatrix u, v;
    spectrum(rho, p_, u);
    spectrum(sigma, q_, v);
    overlap_ = (u.adjoint() * v).cwiseAbs2();
}

double ChernoffTrace::operator()(double s) const {
    if (!(s >= 0.0) || !(s <= 1.0)) {
        throw DomainError("chernoff_trace: s must lie in [0, 1]");
    }
    // 0^0 is taken as 0: eigenvalues dropped above stay outside the support.
    auto power = [](const Vector &w, double e) {
        Vector out(w.size());
        for (Eigen::Index k = 0; k < w.size(); ++k) {
            out(k) = w(k) > 0.0 ? std::pow(w(k), e) : 0.0;
        }
        return out;
    };
    return power(p_, s).dot(overlap_ * power(q_, 1.0 - s));
}

double chernoff_trace(const FockOperator &rho, const FockOperator &sigma, double s) {
    return ChernoffTrace(rho, sigma)(s);
}

BruteQcb qcb_brute(const FockOperator &rho, const FockOperator &sigma) {
    ChernoffTrace trace(rho, sigma);
    ScalarMinimum m = golden_section([&](double s) { return trace(s); }, 0.0, 1.0, 1e-8);
    // Flat objectives (pure or unchanged states) report s = 1/2.
    double half = trace(0.5);
    if (half <= m.f + 1e-12 * std::max(1.0, std::abs(m.f))) {
        return {std::min(m.f, half), 0.5};
    }
    return {m.f, m.x};
}

double single_copy_error(const FockOperator &rho, const FockOperator &sigma) {
    require_operator(rho);
    if (rho.cutoff != sigma.cutoff) {
        throw ShapeError("single_copy_error: operators have different cutoffs");
    }
    ComplexMatrix diff = rho.matrix - sigma.matrix;
    diff = 0.5 * (diff + diff.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(diff, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) {
        throw NumericError("single_copy_error: eigen-solver failed");
    }
    double norm = eig.eigenvalues().cwiseAbs().sum();
    return std::clamp(0.5 * (1.0 - 0.5 * norm), 0.0, 0.5);
}

}  // namespace gds
