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

#ifndef WEYLCHAN_MEASURES_HPP
#define WEYLCHAN_MEASURES_HPP

#include <optional>
#include <vector>

#include "weylchan/channel.hpp"
#include "weylchan/mub.hpp"
#include "weylchan/spectral.hpp"

namespace weylchan {

/// Canonical decoherence rate gamma(p) = -(1/d) G'(p)/G(p). All d-1 canonical
/// rates of this channel coincide. Diverges at the singular point.
double decoherence_rate(const ChannelParams& params, double p);

struct RateSample {
    double p;
    double gamma;
    double gamma_normalized;
};

struct RateProfile {
    ChannelParams params;
    std::vector<RateSample> samples;
};

/// Rates over a p-grid; points where the rate or its normalization is
/// singular are dropped.
RateProfile sample_rates(const ChannelParams& params, const std::vector<double>& grid);

struct MarkovianScan {
    bool markovian;
    std::optional<double> first_violation;
};

/// Negative-rate criterion on a grid: non-Markovian iff gamma < -1e-12 at
/// some grid point; reports the first violating p.
MarkovianScan is_markovian_rate(const ChannelParams& params, const std::vector<double>& grid);

/// h(p) = d G(p) + G'(p); denominator of the normalized rate.
double h_factor(const ChannelParams& params, double p);

/// Normalized rate -gamma/(1 - gamma) = G'(p)/h(p); bounded at the singular
/// point, positive exactly where gamma is negative.
double gamma_normalized(const ChannelParams& params, double p);

struct HclaResult {
    double closed_form;
    double numeric;   // adaptive quadrature of the normalized rate
    double p_minus;   // roots of h
    double p_plus;
    double discriminant;
};

/// Integral of the normalized rate over the negative-rate interval
/// [lower root, 1], in closed form and by quadrature. Zero at alpha = 0 by
/// convention (empty domain).
HclaResult hcla_measure(const ChannelParams& params);

/// Closed-form trace distance between the evolved states of a same-basis MUB
/// pair: constant 1 for computational pairs, |G(p)| otherwise.
double blp_trace_distance(const ChannelParams& params, double p, const MubPair& pair);

/// d/dp of the closed-form trace distance; zero for computational pairs.
double sigma_rate(const ChannelParams& params, double p, const MubPair& pair);

struct BlpResult {
    double closed_form;  // alpha / d
    double numeric;      // quadrature over the increasing-distance region
    MubPair pair;        // maximizing pair (lowest basis, then lowest indices)
};

/// Distinguishability-backflow measure maximized over same-basis MUB pairs.
BlpResult blp_measure(const ChannelParams& params);

/// Spectrum of A^2 for the circulant difference matrix
/// A = ((1-kappa)/d) sum_i (1 - omega^{d-i}) J^i built explicitly and
/// diagonalized numerically. Analytically {(1-kappa)^2 twice, 0 otherwise}.
Spectrum circulant_difference_spectrum(int d, double kappa_val);

/// Brute-force check of the circulant coefficient identity: the polynomial
/// sum_k [sum_{i+j=k mod d} (1-omega^{d-i})(1-omega^{d-j})] x^k evaluates to
/// d^2 at x = 1, omega and to 0 at the remaining roots of unity.
bool lemma1_check(int d);

}  // namespace weylchan

#endif  // WEYLCHAN_MEASURES_HPP
