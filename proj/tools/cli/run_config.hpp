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

#ifndef WEYLCHAN_CLI_RUN_CONFIG_HPP
#define WEYLCHAN_CLI_RUN_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

namespace weylchan::cli {

struct Grid {
    double start = 0.0;
    double end = 1.0;
    double step = 1e-3;
};

struct PairSelector {
    int basis = 1;
    int i = 0;
    int j = 1;
};

enum class OutputFormat { csv, table };

struct RunConfig {
    int d = 3;
    double alpha = 0.5;
    double p_base = 0.3;
    Grid grid;
    PairSelector pair;
    std::string measure = "all";  // hcla | blp | rhp | all
    std::string out;              // empty: stdout
    OutputFormat format = OutputFormat::csv;
};

/// "start:end:step", all within [0,1], step > 0.
Grid parse_grid(const std::string& text);

/// "BASIS:I:J" with I < J.
PairSelector parse_pair(const std::string& text);

OutputFormat parse_format(const std::string& text);

/// key=value lines; '#' starts a comment; whitespace around tokens ignored.
std::map<std::string, std::string> load_config_file(const std::string& path);

/// Grid points start + k*step for k = 0.. while <= end (within one part in
/// 1e9 of a step), computed by multiplication so the grid is reproducible.
std::vector<double> grid_points(const Grid& grid);

/// Shortest-faithful float formatting: 17 significant digits, '.' separator.
std::string format_double(double value);

std::string grid_to_string(const Grid& grid);
std::string pair_to_string(const PairSelector& pair);
std::string format_to_string(OutputFormat format);

}  // namespace weylchan::cli

#endif  // WEYLCHAN_CLI_RUN_CONFIG_HPP
