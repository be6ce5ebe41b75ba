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

#ifndef GDS_VERIFY_H
#define GDS_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

#include "gds/analysis.h"
#include "gds/fock.h"

namespace gds {

/// One class state together with the phase angle applied on A.
struct OracleCase {
    TwoModeClassState spec;
    double lambda;
};

/// Both classes, (nu1, nu2) over pairs from {1, 2, 3}, r in {0.2, 0.5, 0.8},
/// phi in {pi/8, pi/4}, lambda in {pi/2, pi}.
std::vector<OracleCase> default_oracle_grid();

struct OracleComparison {
    OracleCase input;
    double q_gaussian;
    double s_gaussian;
    double q_fock;
    double s_fock;
    double deficit;
};

/// QCB between the state and its image under R(lambda) on A, once from the
/// covariance matrix and once from the truncated density matrix.
OracleComparison compare_with_oracle(const OracleCase &c, int cutoff);

struct CheckResult {
    std::string name;
    bool pass;
    /// Worst discrepancy (or violation count) seen by the check.
    double measure;
    std::string detail;
};

std::vector<CheckResult> verify_oracle(int cutoff);
std::vector<CheckResult> verify_props(std::uint64_t samples, std::uint64_t seed, int threads);
std::vector<CheckResult> verify_sstar(int cutoff);

/// A two-mode state with |c| != |d| and a unitary U_A(theta, x) at which the
/// minimising s is visibly away from 1/2.
struct SStarWitness {
    GaussianState state;
    double lambda;
    double theta;
    double x;
};

SStarWitness asymmetric_sstar_witness();

}  // namespace gds

#endif
