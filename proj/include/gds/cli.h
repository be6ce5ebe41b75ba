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

#ifndef GDS_CLI_H
#define GDS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "gds/class_state.h"

namespace gds {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitUnphysical = 3,
    kExitInvalidLambda = 4,
};

/// Parsed state-spec file: either a class state or raw moments.
struct StateSpec {
    std::optional<TwoModeClassState> class_state;
    GaussianState state;
    double lambda;
    std::optional<double> x_max;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<int> cutoff;
};

/// Throws ShapeError on a malformed document and UnphysicalStateError when
/// the moments violate the uncertainty relation.
StateSpec parse_state_spec(const nlohmann::json &doc);

/// Plain numbers or multiples of pi: "0.3", "pi", "-pi/4", "3*pi/8", "2pi".
double parse_angle(const std::string &text);

/// Shortest form with 17 significant digits, '.' separator, no locale.
std::string format_double(double v);

/// Entry point for the gds executable; returns the process exit code.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace gds

#endif
