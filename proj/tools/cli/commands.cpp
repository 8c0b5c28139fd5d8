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

#include "cli/commands.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "weylchan/channel.hpp"
#include "weylchan/measures.hpp"
#include "weylchan/mub.hpp"
#include "weylchan/representations.hpp"
#include "weylchan/version.hpp"

namespace weylchan::cli {

namespace {

constexpr double kSingularTol = 1e-12;
constexpr double kConditioningTol = 1e-6;
constexpr double kRhpDelta = 1e-4;

const double kNan = std::numeric_limits<double>::quiet_NaN();

// Collects one header and string rows, then renders them as CSV (one
// '#'-prefixed metadata line, comma separators, '\n' endings) or as a padded
// text table. Both renderings are byte-deterministic for a fixed config.
class RowWriter {
public:
    RowWriter(const std::string& metadata, std::vector<std::string> header, OutputFormat format)
        : metadata_(metadata), header_(std::move(header)), format_(format) {}

    void row(const std::vector<std::string>& cells) {
        if (cells.size() != header_.size()) throw std::logic_error("RowWriter: column count mismatch");
        rows_.push_back(cells);
    }

    std::string render() const {
        std::ostringstream out;
        out << "# " << metadata_ << "\n";
        if (format_ == OutputFormat::csv) {
            render_separated(out, ",");
        } else {
            render_padded(out);
        }
        return out.str();
    }

private:
    void render_separated(std::ostringstream& out, const std::string& sep) const {
        for (std::size_t c = 0; c < header_.size(); ++c) out << (c ? sep : "") << header_[c];
        out << "\n";
        for (const auto& row : rows_) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? sep : "") << row[c];
            out << "\n";
        }
    }

    void render_padded(std::ostringstream& out) const {
        std::vector<std::size_t> width(header_.size());
        for (std::size_t c = 0; c < header_.size(); ++c) width[c] = header_[c].size();
        for (const auto& row : rows_)
            for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
        const auto emit = [&](const std::vector<std::string>& cells) {
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c) out << "  ";
                out << cells[c];
                out << std::string(width[c] - cells[c].size(), ' ');
            }
            out << "\n";
        };
        emit(header_);
        for (const auto& row : rows_) emit(row);
    }

    std::string metadata_;
    std::vector<std::string> header_;
    OutputFormat format_;
    std::vector<std::vector<std::string>> rows_;
};

std::string metadata_line(const char* cmd, const RunConfig& config, const std::string& extra = "") {
    std::ostringstream meta;
    meta << "weylchan " << kVersion << " cmd=" << cmd << " d=" << config.d
         << " alpha=" << format_double(config.alpha) << " p-base=" << format_double(config.p_base)
         << " grid=" << grid_to_string(config.grid) << " pair=" << pair_to_string(config.pair)
         << " measure=" << config.measure << " format=" << format_to_string(config.format);
    if (!extra.empty()) meta << " " << extra;
    return meta.str();
}

}  // namespace

std::string cmd_spectrum(const RunConfig& config) {
    const ChannelParams params(config.d, config.alpha);
    const double g_base = coherence_factor(params, config.p_base);
    const int flag = std::abs(g_base) <= kSingularTol ? 1 : (std::abs(g_base) <= kConditioningTol ? 2 : 0);

    std::vector<std::string> header{"p_star"};
    for (int i = 0; i < config.d; ++i) header.push_back("lambda_" + std::to_string(i));
    header.push_back("flag");
    RowWriter writer(metadata_line("spectrum", config), header, config.format);

    for (double p_star : grid_points(config.grid)) {
        if (p_star < config.p_base) continue;
        std::vector<std::string> cells{format_double(p_star)};
        if (flag == 1) {
            for (int i = 0; i < config.d; ++i) cells.push_back(format_double(kNan));
        } else {
            const double r = coherence_factor(params, p_star) / g_base;
            cells.push_back(format_double(1.0 + (config.d - 1.0) * r));
            for (int i = 1; i < config.d; ++i) cells.push_back(format_double(1.0 - r));
        }
        cells.push_back(std::to_string(flag));
        writer.row(cells);
    }
    return writer.render();
}

std::string cmd_rates(const RunConfig& config) {
    const ChannelParams params(config.d, config.alpha);
    RowWriter writer(metadata_line("rates", config), {"p", "gamma", "gamma_normalized", "flag"},
                     config.format);
    for (double p : grid_points(config.grid)) {
        const bool g_singular = std::abs(coherence_factor(params, p)) <= kSingularTol;
        const bool h_singular = std::abs(h_factor(params, p)) <= kSingularTol;
        const double gamma = g_singular ? kNan : decoherence_rate(params, p);
        const double gamma_norm = h_singular ? kNan : gamma_normalized(params, p);
        writer.row({format_double(p), format_double(gamma), format_double(gamma_norm),
                    std::to_string((g_singular || h_singular) ? 1 : 0)});
    }
    return writer.render();
}

std::string cmd_measures(const RunConfig& config) {
    const bool want_hcla = config.measure == "all" || config.measure == "hcla";
    const bool want_blp = config.measure == "all" || config.measure == "blp";
    const bool want_rhp = config.measure == "all" || config.measure == "rhp";
    if (!want_hcla && !want_blp && !want_rhp)
        throw std::invalid_argument("measures: unknown selection '" + config.measure + "'");

    std::vector<std::string> header{"alpha"};
    if (want_hcla) {
        header.push_back("hcla_closed");
        header.push_back("hcla_numeric");
    }
    if (want_blp) {
        header.push_back("blp_closed");
        header.push_back("blp_numeric");
    }
    if (want_rhp) header.push_back("rhp");
    RowWriter writer(
        metadata_line("measures", config, "blp-scope=mub-restricted rhp-delta=" + format_double(kRhpDelta) +
                                              " (witness integral excises the divergent window)"),
        header, config.format);

    for (double alpha : grid_points(config.grid)) {
        const ChannelParams params(config.d, alpha);
        std::vector<std::string> cells{format_double(alpha)};
        if (want_hcla) {
            const HclaResult h = hcla_measure(params);
            cells.push_back(format_double(h.closed_form));
            cells.push_back(format_double(h.numeric));
        }
        if (want_blp) {
            const BlpResult b = blp_measure(params);
            cells.push_back(format_double(b.closed_form));
            cells.push_back(format_double(b.numeric));
        }
        if (want_rhp) cells.push_back(format_double(rhp_integral(params, kRhpDelta).value));
        writer.row(cells);
    }
    return writer.render();
}

std::string cmd_distance(const RunConfig& config) {
    const ChannelParams params(config.d, config.alpha);
    const MubFamily fam = mub_family(config.d);
    if (config.pair.basis >= fam.count() || config.pair.j >= config.d)
        throw std::invalid_argument("distance: pair out of range for this dimension");
    const MubPair pair{config.pair.basis, config.pair.i, config.pair.j};
    const DensityMatrix rho1 = mub_state(fam, pair.basis, pair.i);
    const DensityMatrix rho2 = mub_state(fam, pair.basis, pair.j);

    RowWriter writer(metadata_line("distance", config), {"p", "D_closed", "D_numeric"}, config.format);
    for (double p : grid_points(config.grid)) {
        const double closed = blp_trace_distance(params, p, pair);
        const double numeric = trace_distance(evolve(params, p, rho1), evolve(params, p, rho2));
        writer.row({format_double(p), format_double(closed), format_double(numeric)});
    }
    return writer.render();
}

}  // namespace weylchan::cli
