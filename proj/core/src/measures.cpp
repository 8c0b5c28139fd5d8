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

#include "weylchan/measures.hpp"

#include <cmath>
#include <stdexcept>

#include "weylchan/quadrature.hpp"
#include "weylchan/weyl.hpp"

namespace weylchan {

namespace {

constexpr double kSingularTol = 1e-12;
constexpr double kNegativeRateTol = 1e-12;

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

double decoherence_rate(const ChannelParams& params, double p) {
    const double g = coherence_factor(params, p);
    if (std::abs(g) <= kSingularTol) throw std::domain_error("decoherence_rate: singular point");
    return -coherence_factor_derivative(params, p) / (params.d * g);
}

RateProfile sample_rates(const ChannelParams& params, const std::vector<double>& grid) {
    RateProfile profile{params, {}};
    profile.samples.reserve(grid.size());
    for (double p : grid) {
        const double g = coherence_factor(params, p);
        const double h = h_factor(params, p);
        if (std::abs(g) <= kSingularTol || std::abs(h) <= kSingularTol) continue;
        profile.samples.push_back(RateSample{p, decoherence_rate(params, p), gamma_normalized(params, p)});
    }
    return profile;
}

MarkovianScan is_markovian_rate(const ChannelParams& params, const std::vector<double>& grid) {
    for (double p : grid) {
        if (std::abs(coherence_factor(params, p)) <= kSingularTol) continue;
        if (decoherence_rate(params, p) < -kNegativeRateTol) return MarkovianScan{false, p};
    }
    return MarkovianScan{true, std::nullopt};
}

double h_factor(const ChannelParams& params, double p) {
    return params.d * coherence_factor(params, p) + coherence_factor_derivative(params, p);
}

double gamma_normalized(const ChannelParams& params, double p) {
    const double h = h_factor(params, p);
    if (std::abs(h) <= kSingularTol) throw std::domain_error("gamma_normalized: h vanishes at this point");
    return coherence_factor_derivative(params, p) / h;
}

HclaResult hcla_measure(const ChannelParams& params) {
    if (params.alpha <= 0.0) {
        // No negative-rate region; the measure is zero by convention and the
        // h-root fields are left at the limiting values.
        return HclaResult{0.0, 0.0, 0.0, 0.0, 0.0};
    }
    const double d = params.d;
    const double a = params.alpha;
    const double root = singular_point(params);

    const double lead = (d - 1.0) * a;                         // p^2 coefficient of h
    const double b_coef = (d - 2.0 * (d - 1.0) / d) * a + d;   // -p coefficient of h
    const double disc = b_coef * b_coef - 4.0 * lead * (d - 1.0 - a);
    if (disc <= 0.0) throw std::runtime_error("hcla_measure: h has no real roots");
    const double sqrt_disc = std::sqrt(disc);
    const double p_plus = (b_coef + sqrt_disc) / (2.0 * lead);
    const double p_minus = (b_coef - sqrt_disc) / (2.0 * lead);

    const double h1 = h_factor(params, 1.0);
    const double h_root = h_factor(params, root);
    const double closed =
        std::log(std::abs(h1 / h_root)) / d +
        2.0 * (d - 1.0) * a / (d * d * sqrt_disc) *
            std::log(std::abs((1.0 - p_minus) * (root - p_plus) / ((1.0 - p_plus) * (root - p_minus))));

    const auto integrand = [&params](double p) { return gamma_normalized(params, p); };
    const double numeric = adaptive_simpson(integrand, root, 1.0, 1e-9);

    return HclaResult{closed, numeric, p_minus, p_plus, disc};
}

double blp_trace_distance(const ChannelParams& params, double p, const MubPair& pair) {
    if (pair.basis == 0) return 1.0;
    return std::abs(coherence_factor(params, p));
}

double sigma_rate(const ChannelParams& params, double p, const MubPair& pair) {
    if (pair.basis == 0) return 0.0;
    return sign_of(coherence_factor(params, p)) * coherence_factor_derivative(params, p);
}

BlpResult blp_measure(const ChannelParams& params) {
    const MubFamily fam = mub_family(params.d);
    const auto pairs = mub_pairs(fam, true);
    if (pairs.empty()) throw std::logic_error("blp_measure: no non-computational pairs");
    const double closed = params.alpha / params.d;

    double best = -1.0;
    MubPair best_pair = pairs.front();
    const double root = singular_point(params);
    for (const auto& pair : pairs) {
        double numeric = 0.0;
        if (root < 1.0) {
            // Nudge past the root so the |G| kink sits outside the interval.
            const double lo = std::min(1.0, root + 1e-12);
            numeric = adaptive_simpson(
                [&params, &pair](double p) { return std::max(0.0, sigma_rate(params, p, pair)); }, lo, 1.0,
                1e-9);
        }
        if (numeric > best + 1e-15) {
            best = numeric;
            best_pair = pair;
        }
    }
    return BlpResult{closed, std::max(0.0, best), best_pair};
}

Spectrum circulant_difference_spectrum(int d, double kappa_val) {
    if (d < 2) throw std::invalid_argument("circulant_difference_spectrum: dimension must be at least 2");
    ComplexMatrix a(d, d);
    const double scale = (1.0 - kappa_val) / d;
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
            const int i = ((n - m) % d + d) % d;
            a(m, n) = scale * (Complex(1.0, 0.0) - omega_power(d, d - i));
        }
    return hermitian_eigs(a * a, 1e-10 * std::max(1.0, a.max_abs()));
}

bool lemma1_check(int d) {
    if (d < 2) throw std::invalid_argument("lemma1_check: dimension must be at least 2");
    std::vector<Complex> coeff(static_cast<std::size_t>(d), Complex(0.0, 0.0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const int k = (i + j) % d;
            coeff[static_cast<std::size_t>(k)] +=
                (Complex(1.0, 0.0) - omega_power(d, d - i)) * (Complex(1.0, 0.0) - omega_power(d, d - j));
        }
    for (int s = 0; s < d; ++s) {
        Complex value(0.0, 0.0);
        for (int k = 0; k < d; ++k)
            value += coeff[static_cast<std::size_t>(k)] * omega_power(d, static_cast<long long>(s) * k);
        const double expected = (s == 0 || s == 1) ? static_cast<double>(d) * d : 0.0;
        if (std::abs(value - Complex(expected, 0.0)) > 1e-9) return false;
    }
    return true;
}

}  // namespace weylchan
