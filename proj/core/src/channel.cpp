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

#include "weylchan/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "weylchan/weyl.hpp"

namespace weylchan {

namespace {

constexpr double kCompletenessTol = 1e-10;

void check_p_range(double p) {
    if (p < 0.0 || p > 1.0) throw std::domain_error("channel: p must lie in [0, 1]");
}

double checked_sqrt(double radicand, const char* what) {
    if (radicand < 0.0) {
        if (radicand > -1e-14) return 0.0;  // clamp harmless round-off
        throw std::domain_error(what);
    }
    return std::sqrt(radicand);
}

}  // namespace

ChannelParams::ChannelParams(int d_, double alpha_) : d(d_), alpha(alpha_) {
    if (d < 2 || d > 32) throw std::invalid_argument("ChannelParams: dimension must be in [2, 32]");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("ChannelParams: alpha must lie in [0, 1]");
}

KrausSet make_kraus_set(int d, std::vector<ComplexMatrix> operators) {
    KrausSet ks;
    ks.d = d;
    ks.operators = std::move(operators);
    ComplexMatrix sum(d, d);
    for (const auto& k : ks.operators) {
        if (k.rows() != d || k.cols() != d) throw std::invalid_argument("KrausSet: operator dimension mismatch");
        sum += k.adjoint() * k;
    }
    ks.complete = approx_equal(sum, ComplexMatrix::identity(d), kCompletenessTol);
    return ks;
}

double kappa(const ChannelParams& params, double p) {
    check_p_range(p);
    const double d = params.d;
    return p * (1.0 + params.alpha * (1.0 - (d - 1.0) * p / d));
}

double coherence_factor(const ChannelParams& params, double p) {
    const double d = params.d;
    return (d - 1.0) / d * params.alpha * p * p - (1.0 + params.alpha) * p + 1.0;
}

double coherence_factor_derivative(const ChannelParams& params, double p) {
    const double d = params.d;
    return 2.0 * (d - 1.0) / d * params.alpha * p - (1.0 + params.alpha);
}

CoherenceRoots coherence_roots(const ChannelParams& params) {
    if (params.alpha <= 0.0)
        throw std::domain_error("coherence_roots: no finite roots at alpha = 0 (linear factor)");
    const double d = params.d;
    const double q = 1.0 + params.alpha;
    const double disc = q * q - 4.0 * params.alpha * (d - 1.0) / d;
    // disc = (1-alpha)^2 + 4 alpha / d > 0 always, but guard anyway.
    const double root = std::sqrt(std::max(0.0, disc));
    // Additive branch for the upper root, then the product identity for the
    // lower one; avoids cancellation as alpha -> 0.
    const double upper = d / (d - 1.0) * (q + root) / (2.0 * params.alpha);
    const double product = d / ((d - 1.0) * params.alpha);
    return CoherenceRoots{product / upper, upper};
}

double singular_point(const ChannelParams& params) {
    if (params.alpha <= 0.0) return 1.0;
    return coherence_roots(params).lower;
}

KrausSet kraus_diagonal_weyl(const ChannelParams& params, double p) {
    check_p_range(p);
    const int d = params.d;
    const double kap = kappa(params, p);
    const double w0 = checked_sqrt(1.0 - (d - 1.0) * kap / d, "kraus_diagonal_weyl: negative radicand");
    const double wi = checked_sqrt(kap / d, "kraus_diagonal_weyl: negative radicand");
    const auto diag = weyl_diagonal_family(d);
    std::vector<ComplexMatrix> ops;
    ops.reserve(static_cast<std::size_t>(d));
    ops.push_back(diag[0] * Complex(w0, 0.0));
    for (int i = 1; i < d; ++i) ops.push_back(diag[static_cast<std::size_t>(i)] * Complex(wi, 0.0));
    return make_kraus_set(d, std::move(ops));
}

KrausSet kraus_diagonal_weyl_perturbed(int d, double p, double lambda0,
                                       const std::vector<double>& lambda_i) {
    check_p_range(p);
    if (d < 2) throw std::invalid_argument("kraus_diagonal_weyl_perturbed: dimension must be at least 2");
    if (static_cast<int>(lambda_i.size()) != d - 1)
        throw std::invalid_argument("kraus_diagonal_weyl_perturbed: expected d-1 perturbation values");
    const auto diag = weyl_diagonal_family(d);
    std::vector<ComplexMatrix> ops;
    ops.reserve(static_cast<std::size_t>(d));
    const double w0 = checked_sqrt((1.0 + lambda0) * (1.0 - (d - 1.0) * p / d),
                                   "kraus_diagonal_weyl_perturbed: negative radicand");
    ops.push_back(diag[0] * Complex(w0, 0.0));
    for (int i = 1; i < d; ++i) {
        const double wi = checked_sqrt((1.0 + lambda_i[static_cast<std::size_t>(i - 1)]) * p / d,
                                       "kraus_diagonal_weyl_perturbed: negative radicand");
        ops.push_back(diag[static_cast<std::size_t>(i)] * Complex(wi, 0.0));
    }
    return make_kraus_set(d, std::move(ops));
}

KrausSet kraus_weyl_full(const ChannelParams& params, double p, const std::vector<double>& lambdas) {
    check_p_range(p);
    const int d = params.d;
    if (static_cast<int>(lambdas.size()) != d * d)
        throw std::invalid_argument("kraus_weyl_full: expected d^2 perturbation values");
    std::vector<ComplexMatrix> ops;
    ops.reserve(lambdas.size());
    const double w0 = checked_sqrt((1.0 + lambdas[0]) * (1.0 - (d * d - 1.0) * p / (d * d)),
                                   "kraus_weyl_full: negative radicand");
    ops.push_back(ComplexMatrix::identity(d) * Complex(w0, 0.0));
    for (int a = 1; a < d * d; ++a) {
        const double wa = checked_sqrt((1.0 + lambdas[static_cast<std::size_t>(a)]) * p / (d * d),
                                       "kraus_weyl_full: negative radicand");
        ops.push_back(weyl(WeylIndex::from_flat(d, a)) * Complex(wa, 0.0));
    }
    return make_kraus_set(d, std::move(ops));
}

ComplexMatrix apply_kraus(const KrausSet& ks, const ComplexMatrix& x) {
    if (x.rows() != ks.d || x.cols() != ks.d) throw std::invalid_argument("apply_kraus: dimension mismatch");
    ComplexMatrix out(ks.d, ks.d);
    for (const auto& k : ks.operators) out += k * x * k.adjoint();
    return out;
}

DensityMatrix apply_kraus(const KrausSet& ks, const DensityMatrix& rho) {
    if (!ks.complete) throw std::invalid_argument("apply_kraus: Kraus set is not complete");
    return DensityMatrix(apply_kraus(ks, rho.matrix()));
}

DensityMatrix evolve(const ChannelParams& params, double p, const DensityMatrix& rho0) {
    check_p_range(p);
    if (rho0.dim() != params.d) throw std::invalid_argument("evolve: dimension mismatch");
    const double g = coherence_factor(params, p);
    ComplexMatrix m = rho0.matrix();
    for (int i = 0; i < params.d; ++i)
        for (int j = 0; j < params.d; ++j)
            if (i != j) m(i, j) *= g;
    return DensityMatrix(m);
}

}  // namespace weylchan
