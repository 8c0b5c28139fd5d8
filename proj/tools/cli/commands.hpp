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

#ifndef WEYLCHAN_CLI_COMMANDS_HPP
#define WEYLCHAN_CLI_COMMANDS_HPP

#include <string>

#include "cli/run_config.hpp"

namespace weylchan::cli {

/// Eigenvalue curves of the bridging map over a p_star grid at fixed p_base.
/// Columns: p_star, lambda_0 .. lambda_{d-1}, flag. Flag 1 marks a singular
/// base point (values unavailable), flag 2 an ill-conditioned one.
std::string cmd_spectrum(const RunConfig& config);

/// Decoherence rate and its normalized version over a p grid.
/// Columns: p, gamma, gamma_normalized, flag (1 where a denominator
/// vanishes; the affected value is emitted as nan).
std::string cmd_rates(const RunConfig& config);

/// Non-Markovianity measures over an alpha sweep (the grid is read as the
/// alpha range). Column set depends on config.measure.
std::string cmd_measures(const RunConfig& config);

/// Closed-form and evolved-state trace distance for one MUB pair over a p
/// grid. Columns: p, D_closed, D_numeric.
std::string cmd_distance(const RunConfig& config);

}  // namespace weylchan::cli

#endif  // WEYLCHAN_CLI_COMMANDS_HPP
