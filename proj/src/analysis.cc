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

#include "gds/analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "gds/errors.h"

namespace gds {

double log_negativity(const GaussianState &state) {
    if (state.n_modes() != 2) {
        throw ShapeError("log_negativity: expected a two-mode state");
    }
    require_physical(state);
    const Matrix &g = state.gamma;
    double det_a = g.block<2, 2>(0, 0).determinant();
    double det_b = g.block<2, 2>(2, 2).determinant();
    double det_c = g.block<2, 2>(0, 2).determinant();
    double det_g = g.determinant();
    double dt = det_a + det_b - 2.0 * det_c;
    double disc = std::max(0.0, dt * dt - 4.0 * det_g);
    // Smaller root of x^2 - dt x + det, written without cancellation.
    double nu_minus_sq = 2.0 * det_g / (dt + std::sqrt(disc));
    return std::max(0.0, -0.5 * std::log(nu_minus_sq));
}

double log_negativity_explicit(const TwoModeClassState &spec) {
    spec.validate();
    if (spec.cls != StateClass::Squeezed) {
        throw DomainError("log_negativity_explicit: only defined for the squeezed class");
    }
    double xp = 0.5 * (spec.nu1 + spec.nu2);
    double xm = 0.5 * (spec.nu1 - spec.nu2);
    double y = std::cosh(4.0 * spec.param) * xp * xp + xm * xm;
    double p = spec.nu1 * spec.nu2;
    // y - sqrt(y^2 - p^2) = p^2 / (y + sqrt(y^2 - p^2)).
    double root = std::sqrt(std::max(0.0, (y - p) * (y + p)));
    double f = -0.5 * std::log(p * p / (y + root));
    return std::max(0.0, f);
}

double photon_number(const TwoModeClassState &spec) {
    spec.validate();
    double half = 0.5 * (spec.nu1 + spec.nu2);
    if (spec.cls == StateClass::LinearMixed) {
        return half - 1.0;
    }
    return std::cosh(2.0 * spec.param) * half - 1.0;
}

double optimal_lm_gds_at_photon_budget(double n_photons, double lambda) {
    validate_lambda(lambda);
    if (!(n_photons >= 0.0)) {
        throw DomainError("optimal_lm_gds_at_photon_budget: photon number must be >= 0");
    }
    double t = n_photons - n_photons * std::cos(lambda);
    return t / (2.0 + t);
}

double pure_squeezed_gds(double r, double lambda) {
    return gds_closed_form({StateClass::Squeezed, 1.0, 1.0, r}, lambda).value;
}

double invert_pure_squeezed_gds(double target, double lambda) {
    validate_lambda(lambda);
    if (!(target >= 0.0) || !(target < 1.0)) {
        throw DomainError("invert_pure_squeezed_gds: target must lie in [0, 1)");
    }
    if (target == 0.0) {
        return 0.0;
    }
    double lo = 0.0;
    double hi = 1.0;
    while (pure_squeezed_gds(hi, lambda) < target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 64.0) {
            throw NumericError("invert_pure_squeezed_gds: target too close to 1");
        }
    }
    for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        if (pure_squeezed_gds(mid, lambda) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

SymmetricWitness entanglement_witness(double e, double delta, double lambda) {
    if (!(e >= 0.0) || !(delta >= 0.0) || !(delta < 1.0)) {
        return {false, 0.0, 0.0};
    }
    double r = invert_pure_squeezed_gds(delta, lambda);
    if (2.0 * r < e - 1e-12) {
        return {false, 0.0, r};
    }
    return {true, std::exp(std::max(0.0, 2.0 * r - e)), r};
}

SymmetricWitness photon_witness(double n_photons, double delta, double lambda) {
    if (!(n_photons >= 0.0) || !(delta >= 0.0) || !(delta < 1.0)) {
        return {false, 0.0, 0.0};
    }
    double r = invert_pure_squeezed_gds(delta, lambda);
    double nu = (n_photons + 1.0) / std::cosh(2.0 * r);
    if (nu < 1.0 - 1e-12) {
        return {false, nu, r};
    }
    return {true, std::max(1.0, nu), r};
}

PropositionCheck check_proposition1(const TwoModeClassState &spec, double lambda) {
    if (spec.cls != StateClass::Squeezed) {
        throw DomainError("check_proposition1: only defined for the squeezed class");
    }
    double gds = gds_closed_form(spec, lambda).value;
    double e = log_negativity_explicit(spec);
    double bound = pure_squeezed_gds(0.5 * e, lambda);
    return {gds >= bound - 1e-9, gds, bound, entanglement_witness(e, gds, lambda)};
}

PropositionCheck check_proposition2(const TwoModeClassState &spec, double lambda) {
    if (spec.cls != StateClass::Squeezed) {
        throw DomainError("check_proposition2: only defined for the squeezed class");
    }
    double gds = gds_closed_form(spec, lambda).value;
    double n = photon_number(spec);
    double bound = pure_squeezed_gds(std::asinh(std::sqrt(0.5 * n)), lambda);
    return {gds <= bound + 1e-9, gds, bound, photon_witness(n, gds, lambda)};
}

GaussianState heterodyne_condition(const GaussianState &state, const Vector &beta, int n_a) {
    int n = state.n_modes();
    if (n_a <= 0 || n_a >= n) {
        throw ShapeError("heterodyne_condition: invalid partition");
    }
    int nb = n - n_a;
    if (beta.size() != 2 * nb) {
        throw ShapeError("heterodyne_condition: outcome length must be 2 n_B");
    }
    Matrix ga = state.block_a(n_a);
    Matrix gb = state.block_b(n_a);
    Matrix c = state.block_off(n_a);
    Matrix k = (gb + Matrix::Identity(2 * nb, 2 * nb)).ldlt().solve(c.transpose()).transpose();
    GaussianState out;
    out.gamma = ga - k * c.transpose();
    out.gamma = 0.5 * (out.gamma + out.gamma.transpose());
    out.xi = state.xi.head(2 * n_a) + k * (beta - state.xi.tail(2 * nb));
    return out;
}

CqWitness cq_witness(const GaussianState &state, int n_a) {
    require_physical(state);
    int n = state.n_modes();
    if (n_a <= 0 || n_a >= n) {
        throw ShapeError("cq_witness: invalid partition");
    }
    int nb = n - n_a;
    CqWitness out;
    double scale = std::max(1.0, max_abs(state.gamma));
    out.is_cq = max_abs(state.block_off(n_a)) <= 1e-10 * scale;

    Matrix gb = state.block_b(n_a);
    Matrix k = (gb + Matrix::Identity(2 * nb, 2 * nb)).ldlt().solve(state.block_off(n_a).transpose()).transpose();
    Eigen::JacobiSVD<Matrix> svd(k, Eigen::ComputeFullV);
    out.beta0 = svd.matrixV().col(0);
    Vector origin = state.xi.tail(2 * nb);
    GaussianState at_zero = heterodyne_condition(state, origin, n_a);
    GaussianState at_beta = heterodyne_condition(state, origin + out.beta0, n_a);
    out.xi_at_zero = at_zero.xi;
    out.xi_at_beta0 = at_beta.xi;
    out.xi12 = product_gaussian_moments(at_zero, at_beta).xi12;
    out.xi21 = product_gaussian_moments(at_beta, at_zero).xi12;
    return out;
}

std::vector<SampleRecord> sample_states(std::uint64_t count, const SampleRanges &ranges, bool symmetric,
                                        std::uint64_t seed, double lambda, int threads) {
    if (count < 1) {
        throw DomainError("sample_states: count must be >= 1");
    }
    if (!std::isfinite(ranges.nu_min) || !std::isfinite(ranges.nu_max) || !std::isfinite(ranges.param_max) ||
        ranges.nu_min < 1.0 || ranges.nu_max < ranges.nu_min || ranges.param_max < 0.0) {
        throw DomainError("sample_states: invalid ranges");
    }
    validate_lambda(lambda);
    std::vector<SampleRecord> out(count);
    auto draw = [&](std::uint64_t i) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
        std::mt19937_64 eng(seq);
        auto uniform = [&] { return static_cast<double>(eng() >> 11) * 0x1p-53; };
        double span = ranges.nu_max - ranges.nu_min;
        double nu1 = ranges.nu_min + span * uniform();
        double nu2 = symmetric ? nu1 : ranges.nu_min + span * uniform();
        double param = ranges.param_max * uniform();
        TwoModeClassState spec{ranges.cls, nu1, nu2, param};
        double e = ranges.cls == StateClass::Squeezed ? log_negativity_explicit(spec)
                                                      : log_negativity(class_state_covariance(spec));
        out[i] = {spec, gds_closed_form(spec, lambda).value, e, photon_number(spec), i};
    };
    auto run = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            draw(i);
        }
    };
    std::uint64_t workers = std::clamp<std::uint64_t>(threads < 1 ? 1 : threads, 1, count);
    if (workers == 1) {
        run(0, count);
        return out;
    }
    std::vector<std::thread> pool;
    std::uint64_t chunk = (count + workers - 1) / workers;
    for (std::uint64_t t = 0; t < workers; ++t) {
        std::uint64_t b = t * chunk;
        std::uint64_t e = std::min(count, b + chunk);
        if (b < e) {
            pool.emplace_back(run, b, e);
        }
    }
    for (auto &th : pool) {
        th.join();
    }
    return out;
}

}  // namespace gds
