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

#ifndef GDS_FOCK_H
#define GDS_FOCK_H

#include "gds/linalg.h"

namespace gds {

/// Default tolerance on the trace lost to the Fock cutoff.
inline constexpr double kTruncTol = 1e-6;

/// Operator on the truncated two-mode Fock space, basis |m>_A |n>_B at
/// index m * cutoff + n.
struct FockOperator {
    int cutoff;
    ComplexMatrix matrix;
    /// 1 - trace, accumulated from the thermal tails and from population
    /// pushed past the cutoff by squeezing.
    double deficit;

    bool within(double trunc_tol = kTruncTol) const { return deficit <= trunc_tol; }
    double trace() const { return matrix.trace().real(); }
};

/// Product of thermal states with nbar = (nu - 1) / 2, truncated at `cutoff`
/// photons per mode.
FockOperator build_thermal(double nu1, double nu2, int cutoff);

/// rho -> U rho U^dagger with U = exp(r (a^dagger b^dagger - a b)).
///
/// U is exponentiated block by block (n_a - n_b is conserved) in a space
/// padded to 3 * cutoff photons per mode, then cut back; the population
/// that leaves the cutoff is added to the deficit.
FockOperator apply_two_mode_squeeze(const FockOperator &op, double r);

/// rho -> U rho U^dagger with U = exp(-phi (a^dagger b - b^dagger a)).
FockOperator apply_beam_splitter(const FockOperator &op, double phi);

/// rho -> U rho U^dagger with U = exp(i lambda n_a).
FockOperator apply_local_phase(const FockOperator &op, double lambda);

/// <n_a + n_b>.
double mean_photon_number(const FockOperator &op);

/// Tr[rho^s sigma^(1-s)] with both eigendecompositions computed once.
///
/// Eigenvalues below 1e-14 are dropped (this also removes round-off
/// negatives) and the rest renormalised to unit trace.
class ChernoffTrace {
public:
    ChernoffTrace(const FockOperator &rho, const FockOperator &sigma);
    double operator()(double s) const;

private:
    Vector p_;
    Vector q_;
    Matrix overlap_;
};

double chernoff_trace(const FockOperator &rho, const FockOperator &sigma, double s);

struct BruteQcb {
    double q;
    double s_star;
};

/// Golden-section minimum of the Chernoff trace over s in [0, 1], tolerance 1e-8.
/// Reports s = 1/2 when the value there ties the minimum to 1e-12.
BruteQcb qcb_brute(const FockOperator &rho, const FockOperator &sigma);

/// Minimum single-copy error probability (1 - ||rho - sigma||_1 / 2) / 2.
double single_copy_error(const FockOperator &rho, const FockOperator &sigma);

}  // namespace gds

#endif
