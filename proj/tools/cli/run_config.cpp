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

#include "cli/run_config.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace weylchan::cli {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        if (next == std::string::npos) {
            parts.push_back(s.substr(pos));
            break;
        }
        parts.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return parts;
}

double to_double(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": bad number '" + s + "'");
    }
}

int to_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": bad integer '" + s + "'");
    }
}

}  // namespace

Grid parse_grid(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw std::invalid_argument("grid: expected start:end:step");
    Grid g;
    g.start = to_double(parts[0], "grid start");
    g.end = to_double(parts[1], "grid end");
    g.step = to_double(parts[2], "grid step");
    if (!(g.step > 0.0)) throw std::invalid_argument("grid: step must be positive");
    if (g.start < 0.0 || g.end > 1.0 || g.start > g.end)
        throw std::invalid_argument("grid: range must lie within [0, 1]");
    return g;
}

PairSelector parse_pair(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw std::invalid_argument("pair: expected BASIS:I:J");
    PairSelector p;
    p.basis = to_int(parts[0], "pair basis");
    p.i = to_int(parts[1], "pair i");
    p.j = to_int(parts[2], "pair j");
    if (p.basis < 0 || p.i < 0 || p.j <= p.i) throw std::invalid_argument("pair: need basis >= 0 and i < j");
    return p;
}

OutputFormat parse_format(const std::string& text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "table") return OutputFormat::table;
    throw std::invalid_argument("format: expected csv or table");
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    std::map<std::string, std::string> values;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("config: expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw std::runtime_error("config: empty key");
        values[key] = value;
    }
    return values;
}

std::vector<double> grid_points(const Grid& grid) {
    std::vector<double> points;
    const double tol = grid.step * 1e-9;
    for (long long k = 0;; ++k) {
        const double p = grid.start + static_cast<double>(k) * grid.step;
        if (p > grid.end + tol) break;
        points.push_back(std::min(p, grid.end));
    }
    return points;
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string grid_to_string(const Grid& grid) {
    return format_double(grid.start) + ":" + format_double(grid.end) + ":" + format_double(grid.step);
}

std::string pair_to_string(const PairSelector& pair) {
    return std::to_string(pair.basis) + ":" + std::to_string(pair.i) + ":" + std::to_string(pair.j);
}

std::string format_to_string(OutputFormat format) {
    return format == OutputFormat::csv ? "csv" : "table";
}

}  // namespace weylchan::cli
