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

#include "gds/discriminating_strength.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "gds/errors.h"
#include "gds/optimize.h"

namespace gds {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Candidate {
    double q;
    double s_star;
    double theta;
    double x;
};

GaussianUnitary local_unitary(double theta, double x, double lambda) {
    return {local_phase_symplectic(theta, x, lambda), Vector::Zero(2)};
}

}  // namespace

void validate_lambda(double lambda) {
    if (!std::isfinite(lambda)) {
        throw InvalidLambdaError("lambda must be finite");
    }
    double w = wrap_angle(lambda);
    if (w <= 1e-9 || w >= kTwoPi - 1e-9) {
        throw InvalidLambdaError("lambda = " + std::to_string(lambda) +
                                 " is an integer multiple of 2*pi; the phase shift would be trivial");
    }
}

UnitarySetSpec UnitarySetSpec::make(std::vector<double> lambdas) {
    UnitarySetSpec out{std::move(lambdas)};
    out.validate();
    return out;
}

void UnitarySetSpec::validate() const {
    if (lambdas.empty()) {
        throw ShapeError("UnitarySetSpec: need at least one angle");
    }
    for (double l : lambdas) {
        validate_lambda(l);
    }
}

Eigen::Matrix2d local_phase_symplectic(double theta, double x, double lambda) {
    return rotation(theta) * single_mode_squeezer(x) * rotation(lambda) * single_mode_squeezer(-x) *
           rotation(-theta);
}

QcbResult gds_inner(const GaussianState &state, double lambda, double theta, double x) {
    if (state.n_modes() != 2) {
        throw ShapeError("gds_inner: expected a two-mode state");
    }
    require_physical(state);
    validate_lambda(lambda);
    QcbObjective obj(williamson(state), Vector::Zero(4), local_unitary(theta, x, lambda), {1, 1});
    return minimize_qcb(obj);
}

GdsResult gds_numeric(const GaussianState &state, double lambda, const GdsOptions &options) {
    if (state.n_modes() != 2) {
        throw ShapeError("gds_numeric: expected a two-mode state, got " + std::to_string(state.n_modes()) +
                         " modes");
    }
    require_physical(state);
    validate_lambda(lambda);
    if (!(options.x_max >= 0.0) || options.theta_points < 1 || options.x_points < 1 || options.starts < 0) {
        throw DomainError("gds_numeric: invalid optimizer options");
    }
    const WilliamsonDecomposition w = williamson(state);
    const Vector zero = Vector::Zero(4);
    const double x_max = options.x_max;

    auto evaluate = [&](double theta, double x) {
        QcbObjective obj(w, zero, local_unitary(theta, x, lambda), {1, 1});
        QcbResult r = minimize_qcb(obj);
        return Candidate{r.q, r.s_star, theta, x};
    };

    const int nt = options.theta_points;
    const int nx = options.x_points;
    const int total = nt * nx;
    std::vector<Candidate> grid(total);
    auto fill = [&](int begin, int end) {
        for (int k = begin; k < end; ++k) {
            int i = k / nx;
            int j = k % nx;
            double theta = kTwoPi * i / nt;
            double x = nx == 1 ? 0.0 : -x_max + 2.0 * x_max * j / (nx - 1);
            grid[k] = evaluate(theta, x);
        }
    };
    int threads = std::max(1, std::min(options.threads, total));
    if (threads == 1) {
        fill(0, total);
    } else {
        std::vector<std::thread> pool;
        int chunk = (total + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            int b = t * chunk;
            int e = std::min(total, b + chunk);
            if (b < e) {
                pool.emplace_back(fill, b, e);
            }
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    std::vector<int> order(total);
    for (int k = 0; k < total; ++k) {
        order[k] = k;
    }
    std::stable_sort(order.begin(), order.end(), [&](int l, int r) { return grid[l].q > grid[r].q; });

    std::vector<Candidate> candidates = grid;
    Vector step(2);
    step << kTwoPi / nt, nx > 1 ? 2.0 * x_max / (nx - 1) : 0.1;
    NelderMeadOptions nm_opts{options.diameter_tol, options.max_evaluations};
    for (int k = 0; k < std::min(options.starts, total); ++k) {
        const Candidate &seed = grid[order[k]];
        Vector start(2);
        start << seed.theta, seed.x;
        auto objective = [&](const Vector &z) {
            double x = std::clamp(z(1), -x_max, x_max);
            return -evaluate(wrap_angle(z(0)), x).q;
        };
        NelderMeadResult r = nelder_mead(objective, start, step, nm_opts);
        candidates.push_back(evaluate(wrap_angle(r.x(0)), std::clamp(r.x(1), -x_max, x_max)));
    }

    double q_max = candidates.front().q;
    for (const Candidate &c : candidates) {
        q_max = std::max(q_max, c.q);
    }
    // Near-optimal candidates are ties: smallest |x|, then smallest theta.
    const Candidate *chosen = nullptr;
    for (const Candidate &c : candidates) {
        if (q_max - c.q > 1e-12) {
            continue;
        }
        if (chosen == nullptr || std::abs(c.x) < std::abs(chosen->x) ||
            (std::abs(c.x) == std::abs(chosen->x) && c.theta < chosen->theta)) {
            chosen = &c;
        }
    }
    double value = std::clamp(1.0 - q_max, 0.0, 1.0);
    return {value, chosen->theta, chosen->x, chosen->s_star, GdsMethod::NumericOptimum};
}

double a_plus(double nu1, double nu2) {
    return 0.5 * (lambda_fn(0.5, nu1) + lambda_fn(0.5, nu2));
}

double a_minus(double nu1, double nu2) {
    return 0.5 * (lambda_fn(0.5, nu1) - lambda_fn(0.5, nu2));
}

GdsResult gds_closed_form(const TwoModeClassState &spec, double lambda) {
    spec.validate();
    validate_lambda(lambda);
    double ap = a_plus(spec.nu1, spec.nu2);
    double am = a_minus(spec.nu1, spec.nu2);
    double k = std::pow(std::sin(lambda / 2.0), 2);
    double value;
    if (spec.cls == StateClass::Squeezed) {
        double t = std::pow(std::sinh(2.0 * spec.param), 2) * k;
        double ratio = am / ap;
        value = t == 0.0 ? 0.0 : t / ((1.0 - ratio * ratio) + t);
    } else if (std::abs(am) < 1e-12) {
        value = 0.0;
    } else {
        double t = std::pow(std::sin(2.0 * spec.param), 2) * k;
        double ratio = ap / am;
        value = t == 0.0 ? 0.0 : t / ((ratio * ratio - 1.0) + t);
    }
    return {value, 0.0, 0.0, 0.5, GdsMethod::ClosedForm};
}

double gds_symmetric_standard(double a, double c, StateClass cls, double lambda) {
    validate_lambda(lambda);
    TwoModeStandardForm sf{a, a, c, cls == StateClass::Squeezed ? -c : c};
    require_physical(GaussianState{sf.covariance(), Vector::Zero(4)});
    double s2 = std::pow(std::sin(lambda / 2.0), 2);
    double c2 = std::pow(std::cos(lambda / 2.0), 2);
    if (cls == StateClass::Squeezed) {
        return c * c * s2 / (a * a - c * c * c2);
    }
    double root = std::sqrt(std::max(0.0, (a + c) * (a + c) - 1.0)) +
                  std::sqrt(std::max(0.0, (a - c) * (a - c) - 1.0));
    double denom = root * root - 4.0 * c * c * c2;
    return c == 0.0 ? 0.0 : 4.0 * c * c * s2 / denom;
}

double f_half(const TwoModeClassState &spec, double lambda, double theta, double x) {
    (void)theta;
    spec.validate();
    double ap = a_plus(spec.nu1, spec.nu2);
    double am = a_minus(spec.nu1, spec.nu2);
    double p = ap * ap - am * am;
    double big_s, big_c;
    if (spec.cls == StateClass::Squeezed) {
        big_s = ap * ap * std::pow(std::sinh(2.0 * spec.param), 2);
        big_c = ap * ap * std::pow(std::cosh(2.0 * spec.param), 2) - am * am;
    } else {
        big_s = am * am * std::pow(std::sin(2.0 * spec.param), 2);
        big_c = ap * ap - am * am * std::pow(std::cos(2.0 * spec.param), 2);
    }
    double first = 4.0 * p + 4.0 * std::pow(std::sin(lambda / 2.0), 2) * big_s;
    return first * first + 16.0 * std::pow(std::sinh(2.0 * x), 2) * std::pow(std::sin(lambda), 2) * p * big_c;
}

bool theorem1_predicate(const GaussianState &state, double lambda, Partition partition) {
    (void)lambda;
    if (partition.n_a + partition.n_b != state.n_modes() || partition.n_a <= 0 || partition.n_b <= 0) {
        throw ShapeError("theorem1_predicate: partition does not match the state");
    }
    double scale = std::max(1.0, max_abs(state.gamma));
    return max_abs(state.block_off(partition.n_a)) <= 1e-10 * scale;
}

}  // namespace gds
