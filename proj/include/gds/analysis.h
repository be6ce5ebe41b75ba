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

#ifndef GDS_ANALYSIS_H
#define GDS_ANALYSIS_H

#include <cstdint>
#include <vector>

#include "gds/discriminating_strength.h"

namespace gds {

/// Logarithmic negativity (natural log) of a two-mode state.
double log_negativity(const GaussianState &state);

/// Same quantity for a squeezed-class state, written in (nu1, nu2, r).
/// Stays accurate for large r where the covariance route loses digits.
double log_negativity_explicit(const TwoModeClassState &spec);

/// Mean total photon number.
double photon_number(const TwoModeClassState &spec);

/// Best linear-mixing GDS at a fixed total photon number; reached at
/// nu1 = 2N + 1, nu2 = 1, phi = pi/4.
double optimal_lm_gds_at_photon_budget(double n_photons, double lambda);

/// GDS of a symmetric squeezed state; independent of nu.
double pure_squeezed_gds(double r, double lambda);

/// Smallest r >= 0 with pure_squeezed_gds(r, lambda) = target, by bisection
/// to 1e-10 in the GDS value. Requires 0 <= target < 1.
double invert_pure_squeezed_gds(double target, double lambda);

/// A symmetric squeezed state (nu, nu, r).
struct SymmetricWitness {
    bool feasible;
    double nu;
    double r;
};

/// Symmetric state with log-negativity E and GDS delta, if one exists
/// (needs pure_squeezed_gds(E/2) <= delta < 1).
SymmetricWitness entanglement_witness(double e, double delta, double lambda);

/// Symmetric state with photon number N and GDS delta, if one exists
/// (needs 0 <= delta <= pure_squeezed_gds(asinh(sqrt(N/2)))).
SymmetricWitness photon_witness(double n_photons, double delta, double lambda);

struct PropositionCheck {
    bool bound_holds;
    double gds;
    /// Pure-state curve evaluated at the matching E (or N).
    double pure_bound;
    /// Symmetric state sharing this state's E (or N) and GDS.
    SymmetricWitness witness;
};

/// GDS >= pure-state GDS at the same log-negativity.
PropositionCheck check_proposition1(const TwoModeClassState &spec, double lambda);

/// GDS <= pure-state GDS at the same photon number.
PropositionCheck check_proposition2(const TwoModeClassState &spec, double lambda);

/// State left on A after heterodyning B with outcome beta.
GaussianState heterodyne_condition(const GaussianState &state, const Vector &beta, int n_a = 1);

struct CqWitness {
    bool is_cq;
    /// Unit outcome that moves the conditional displacement the most.
    Vector beta0;
    Vector xi_at_zero;
    Vector xi_at_beta0;
    /// Displacements of rho_0 rho_beta0 and rho_beta0 rho_0; they differ unless the two commute.
    ComplexVector xi12;
    ComplexVector xi21;
};

/// Classical-quantum test through heterodyne conditioning on B.
CqWitness cq_witness(const GaussianState &state, int n_a = 1);

struct SampleRanges {
    StateClass cls = StateClass::Squeezed;
    double nu_min = 1.0;
    double nu_max = 20.0;
    /// r_max for squeezed, phi_max for linear mixing.
    double param_max = 5.0;
};

struct SampleRecord {
    TwoModeClassState spec;
    double gds;
    double log_neg;
    double photons;
    std::uint64_t seed_index;
};

/// Uniform draws over the ranges. Record i depends only on (seed, i), so the
/// output is the same for every thread count.
std::vector<SampleRecord> sample_states(std::uint64_t count, const SampleRanges &ranges, bool symmetric,
                                        std::uint64_t seed, double lambda, int threads = 1);

}  // namespace gds

#endif
