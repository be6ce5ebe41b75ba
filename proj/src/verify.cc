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

#include "gds/verify.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace gds {

namespace {

constexpr double kPi = std::numbers::pi;

double uniform(std::mt19937_64 &eng) {
    return static_cast<double>(eng() >> 11) * 0x1p-53;
}

std::string describe(const OracleCase &c) {
    std::ostringstream os;
    os << to_string(c.spec.cls) << " nu=(" << c.spec.nu1 << "," << c.spec.nu2 << ") param=" << c.spec.param
       << " lambda=" << c.lambda;
    return os.str();
}

}  // namespace

std::vector<OracleCase> default_oracle_grid() {
    const std::pair<double, double> nus[] = {{1, 1}, {2, 1}, {3, 1}, {2, 2}, {3, 2}, {3, 3}};
    const double lambdas[] = {kPi / 2, kPi};
    std::vector<OracleCase> out;
    for (auto [n1, n2] : nus) {
        for (double lam : lambdas) {
            for (double r : {0.2, 0.5, 0.8}) {
                out.push_back({{StateClass::Squeezed, n1, n2, r}, lam});
            }
            for (double phi : {kPi / 8, kPi / 4}) {
                out.push_back({{StateClass::LinearMixed, n1, n2, phi}, lam});
            }
        }
    }
    return out;
}

OracleComparison compare_with_oracle(const OracleCase &c, int cutoff) {
    GaussianState state = class_state_covariance(c.spec);
    const double lam[] = {c.lambda};
    QcbResult g = qcb_local(state, phase_unitary(lam), {1, 1});

    FockOperator rho = build_thermal(c.spec.nu1, c.spec.nu2, cutoff);
    rho = c.spec.cls == StateClass::Squeezed ? apply_two_mode_squeeze(rho, c.spec.param)
                                             : apply_beam_splitter(rho, c.spec.param);
    FockOperator sigma = apply_local_phase(rho, c.lambda);
    BruteQcb b = qcb_brute(rho, sigma);
    return {c, g.q, g.s_star, b.q, b.s_star, rho.deficit};
}

std::vector<CheckResult> verify_oracle(int cutoff) {
    double worst_q = 0.0;
    double worst_deficit = 0.0;
    std::string worst_case;
    for (const OracleCase &c : default_oracle_grid()) {
        OracleComparison r = compare_with_oracle(c, cutoff);
        double dq = std::abs(r.q_gaussian - r.q_fock);
        if (dq > worst_q) {
            worst_q = dq;
            worst_case = describe(c);
        }
        worst_deficit = std::max(worst_deficit, r.deficit);
    }
    return {
        {"oracle_qcb", worst_q < 1e-3, worst_q, "max |q_gaussian - q_fock|, worst at " + worst_case},
        {"oracle_deficit", worst_deficit < 1e-4, worst_deficit, "max truncation deficit (gate: 1e-4)"},
    };
}

std::vector<CheckResult> verify_props(std::uint64_t samples, std::uint64_t seed, int threads) {
    std::vector<CheckResult> out;
    auto count_bound = [&](const char *name, const SampleRanges &ranges, bool symmetric, bool prop1) {
        auto recs = sample_states(samples, ranges, symmetric, seed, kPi, threads);
        double violations = 0;
        for (const SampleRecord &r : recs) {
            PropositionCheck c = prop1 ? check_proposition1(r.spec, kPi) : check_proposition2(r.spec, kPi);
            if (!c.bound_holds) {
                ++violations;
            }
        }
        out.push_back({name, violations == 0, violations, std::to_string(samples) + " samples"});
    };
    SampleRanges fig2{StateClass::Squeezed, 1.0, 20.0, 5.0};
    SampleRanges fig3{StateClass::Squeezed, 1.0, 8.0, 7.0};
    count_bound("prop1_symmetric", fig2, true, true);
    count_bound("prop1_asymmetric", fig2, false, true);
    count_bound("prop2_symmetric", fig3, true, false);
    count_bound("prop2_asymmetric", fig3, false, false);

    std::mt19937_64 eng(seed);
    double worst1 = 0.0;
    bool ok1 = true;
    for (int k = 0; k < 100; ++k) {
        double e = 5.0 * uniform(eng);
        double lo = pure_squeezed_gds(0.5 * e, kPi);
        double delta = lo + 0.999 * uniform(eng) * (1.0 - lo);
        SymmetricWitness w = entanglement_witness(e, delta, kPi);
        if (!w.feasible) {
            ok1 = false;
            continue;
        }
        TwoModeClassState s{StateClass::Squeezed, w.nu, w.nu, w.r};
        worst1 = std::max({worst1, std::abs(log_negativity_explicit(s) - e),
                           std::abs(gds_closed_form(s, kPi).value - delta)});
    }
    out.push_back({"prop1_witness", ok1 && worst1 < 1e-9, worst1, "100 (E, GDS) pairs"});

    double worst2 = 0.0;
    bool ok2 = true;
    for (int k = 0; k < 100; ++k) {
        double n = 20.0 * uniform(eng);
        double hi = pure_squeezed_gds(std::asinh(std::sqrt(0.5 * n)), kPi);
        double delta = uniform(eng) * hi;
        SymmetricWitness w = photon_witness(n, delta, kPi);
        if (!w.feasible) {
            ok2 = false;
            continue;
        }
        TwoModeClassState s{StateClass::Squeezed, w.nu, w.nu, w.r};
        worst2 = std::max({worst2, std::abs(photon_number(s) - n) / std::max(1.0, n),
                           std::abs(gds_closed_form(s, kPi).value - delta)});
    }
    out.push_back({"prop2_witness", ok2 && worst2 < 1e-9, worst2, "100 (N, GDS) pairs"});

    double worst_lm = 0.0;
    for (int k = 0; k <= 100; ++k) {
        double n = 0.2 * k;
        double closed = gds_closed_form({StateClass::LinearMixed, 2 * n + 1, 1.0, kPi / 4}, kPi).value;
        worst_lm = std::max({worst_lm, std::abs(optimal_lm_gds_at_photon_budget(n, kPi) - n / (n + 1)),
                             std::abs(closed - n / (n + 1))});
    }
    out.push_back({"lm_photon_budget", worst_lm < 1e-10, worst_lm, "N/(N+1) at (2N+1, 1, pi/4)"});
    return out;
}

std::vector<CheckResult> verify_sstar(int cutoff) {
    double worst_g = 0.0;
    double worst_b = 0.0;
    for (const OracleCase &c : default_oracle_grid()) {
        OracleComparison r = compare_with_oracle(c, cutoff);
        worst_g = std::max(worst_g, std::abs(r.s_gaussian - 0.5));
        worst_b = std::max(worst_b, std::abs(r.s_fock - 0.5));
    }
    SStarWitness w = asymmetric_sstar_witness();
    double dev = std::abs(gds_inner(w.state, w.lambda, w.theta, w.x).s_star - 0.5);
    return {
        {"sstar_gaussian", worst_g < 1e-3, worst_g, "max |s* - 1/2| over the oracle grid"},
        {"sstar_fock", worst_b < 2e-3, worst_b, "max |s* - 1/2| from the truncated density matrices"},
        {"sstar_asymmetric", dev > 1e-2, dev, "|s* - 1/2| for a |c| != |d| state"},
    };
}

SStarWitness asymmetric_sstar_witness() {
    TwoModeStandardForm sf{3.592, 4.405, 3.259, -0.344};
    return {{sf.covariance(), Vector::Zero(4)}, 2.2902, 2.7372, -0.8708};
}

}  // namespace gds
