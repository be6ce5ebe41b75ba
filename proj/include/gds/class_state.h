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

#ifndef GDS_CLASS_STATE_H
#define GDS_CLASS_STATE_H

#include <string>

#include "gds/symplectic.h"

namespace gds {

enum class StateClass { Squeezed, LinearMixed };

/// "squeezed" or "linear-mixed".
std::string to_string(StateClass c);
/// Accepts the names produced by to_string. Throws DomainError otherwise.
StateClass parse_state_class(const std::string &name);

/// Two-mode state S (nu1 1 (+) nu2 1) S^T where S is a two-mode squeezer
/// (param = r) or a beam splitter (param = phi).
struct TwoModeClassState {
    StateClass cls;
    double nu1;
    double nu2;
    double param;

    /// Throws DomainError for nu < 1 or non-finite fields.
    void validate() const;
    Matrix symplectic() const;
};

/// The covariance matrix of the class state, zero displacement.
GaussianState class_state_covariance(const TwoModeClassState &spec);

/// Standard-form parameters written directly in terms of (nu1, nu2, param).
TwoModeStandardForm standard_params_from_class(const TwoModeClassState &spec);

}  // namespace gds

#endif
