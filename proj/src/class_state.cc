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

#include "gds/class_state.h"

#include <cmath>

#include "gds/errors.h"

namespace gds {

std::string to_string(StateClass c) {
    return c == StateClass::Squeezed ? "squeezed" : "linear-mixed";
}

StateClass parse_state_class(const std::string &name) {
    if (name == "squeezed") {
        return StateClass::Squeezed;
    }
    if (name == "linear-mixed") {
        return StateClass::LinearMixed;
    }
    throw DomainError("unknown state class '" + name + "' (expected squeezed or linear-mixed)");
}

void TwoModeClassState::validate() const {
    if (!std::isfinite(nu1) || !std::isfinite(nu2) || !std::isfinite(param)) {
        throw DomainError("class state: non-finite parameter");
    }
    if (nu1 < 1.0 || nu2 < 1.0) {
        throw UnphysicalStateError("class state: symplectic eigenvalues must be >= 1",
                                   std::min(nu1, nu2) - 1.0);
    }
}

Matrix TwoModeClassState::symplectic() const {
    return cls == StateClass::Squeezed ? two_mode_squeezer(param) : beam_splitter(param);
}

GaussianState class_state_covariance(const TwoModeClassState &spec) {
    spec.validate();
    // Entries written out in closed form rather than as S D S^T so that the
    // blocks stay exactly proportional to 1 and sigma_3.
    double a, b, off;
    Matrix g = Matrix::Zero(4, 4);
    if (spec.cls == StateClass::Squeezed) {
        double sum = spec.nu1 + spec.nu2;
        double diff = spec.nu1 - spec.nu2;
        double ch = std::cosh(2.0 * spec.param);
        a = 0.5 * (sum * ch + diff);
        b = 0.5 * (sum * ch - diff);
        off = 0.5 * sum * std::sinh(2.0 * spec.param);
        g(0, 2) = g(2, 0) = off;
        g(1, 3) = g(3, 1) = -off;
    } else {
        double sum = spec.nu1 + spec.nu2;
        double diff = spec.nu1 - spec.nu2;
        double c2 = std::cos(2.0 * spec.param);
        a = 0.5 * (sum + diff * c2);
        b = 0.5 * (sum - diff * c2);
        off = 0.5 * diff * std::sin(2.0 * spec.param);
        g(0, 2) = g(2, 0) = off;
        g(1, 3) = g(3, 1) = off;
    }
    g(0, 0) = g(1, 1) = a;
    g(2, 2) = g(3, 3) = b;
    return {g, Vector::Zero(4)};
}

TwoModeStandardForm standard_params_from_class(const TwoModeClassState &spec) {
    spec.validate();
    double sum = spec.nu1 + spec.nu2;
    double diff = spec.nu1 - spec.nu2;
    if (spec.cls == StateClass::Squeezed) {
        double ch = std::cosh(2.0 * spec.param);
        double c = 0.5 * sum * std::abs(std::sinh(2.0 * spec.param));
        return {0.5 * (sum * ch + diff), 0.5 * (sum * ch - diff), c, -c};
    }
    double c2 = std::cos(2.0 * spec.param);
    double c = 0.5 * std::abs(diff) * std::abs(std::sin(2.0 * spec.param));
    return {0.5 * (sum + diff * c2), 0.5 * (sum - diff * c2), c, c};
}

}  // namespace gds
