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

#ifndef GDS_OPTIMIZE_H
#define GDS_OPTIMIZE_H

#include <functional>

#include "gds/linalg.h"

namespace gds {

struct ScalarMinimum {
    double x;
    double f;
    int evaluations;
};

/// Golden-section search for a unimodal f on [lo, hi]; stops once the
/// bracket is narrower than `tol`.
ScalarMinimum golden_section(const std::function<double(double)> &f, double lo, double hi, double tol);

/// Minimum of a positive, convex f over s in (0, 1).
///
/// Golden-section on [1e-9, 1 - 1e-9] to 1e-9, then one Newton step on log f
/// with central differences, kept only if it lowers f. When f(1/2) is equal
/// to the minimum within 1e-12 (relative), s = 1/2 is reported so that flat
/// objectives give a reproducible location.
ScalarMinimum minimize_over_unit_interval(const std::function<double(double)> &f);

struct NelderMeadOptions {
    /// Stop once every vertex lies within this distance (max norm) of the best one.
    double diameter_tol = 1e-7;
    int max_evaluations = 5000;
};

struct NelderMeadResult {
    Vector x;
    double f;
    int evaluations;
    bool converged;
};

/// Nelder-Mead simplex with the standard coefficients (1, 2, 1/2, 1/2).
/// The initial simplex is start plus step_i along each axis.
NelderMeadResult nelder_mead(const std::function<double(const Vector &)> &f, const Vector &start,
                             const Vector &step, const NelderMeadOptions &options = {});

}  // namespace gds

#endif
