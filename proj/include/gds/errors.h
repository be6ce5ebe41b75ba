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

#ifndef GDS_ERRORS_H
#define GDS_ERRORS_H

#include <stdexcept>
#include <string>

namespace gds {

/// Input has the wrong dimensions, or a matrix that must be symmetric is not.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Argument lies outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Covariance matrix violates the uncertainty relation.
struct UnphysicalStateError : DomainError {
    UnphysicalStateError(const std::string &what, double min_eigenvalue)
        : DomainError(what), min_eigenvalue(min_eigenvalue) {}
    double min_eigenvalue;
};

/// Phase-rotation angle too close to a multiple of 2*pi.
struct InvalidLambdaError : DomainError {
    using DomainError::DomainError;
};

/// A dense solver failed or produced a singular intermediate.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gds

#endif
