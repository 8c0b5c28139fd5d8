// Copyright 2026 The weylchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WEYLCHAN_CLI_VERIFY_SUITE_HPP
#define WEYLCHAN_CLI_VERIFY_SUITE_HPP

#include <string>
#include <vector>

namespace weylchan::cli {

struct SuiteResult {
    std::string name;
    bool passed;
    double worst_deviation;
    std::string note;
};

/// The cross-module invariant suites: operator algebra, representation
/// round-trips, analytic-versus-numeric spectra, divisibility criteria
/// consistency, circulant identities, basis checks, closed-form distances,
/// integrator convergence, distance monotonicity, and measure consistency.
/// Randomized suites draw from a generator seeded with `seed`.
std::vector<SuiteResult> run_verify_suites(unsigned long long seed);

struct VerifyReport {
    std::string text;
    bool passed;
};

VerifyReport cmd_verify(unsigned long long seed);

}  // namespace weylchan::cli

#endif  // WEYLCHAN_CLI_VERIFY_SUITE_HPP
