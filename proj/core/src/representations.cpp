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

#include "weylchan/representations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "weylchan/quadrature.hpp"

namespace weylchan {

namespace {

constexpr double kSingularTol = 1e-12;
constexpr double kConditioningTol = 1e-6;

}  // namespace

ChoiMatrix::ChoiMatrix(int d_, ComplexMatrix m) : d(d_), matrix(std::move(m)) {
    if (matrix.rows() != d * d || matrix.cols() != d * d)
        throw std::invalid_argument("ChoiMatrix: expected a d^2 x d^2 matrix");
    if (matrix.hermiticity_error() > 1e-10 * std::max(1.0, matrix.max_abs()))
        throw std::invalid_argument("ChoiMatrix: not Hermitian");
    if (std::abs(matrix.trace() - Complex(d, 0.0)) > 1e-9 * std::max(1.0, matrix.max_abs()))
        throw std::invalid_argument("ChoiMatrix: trace differs from d");
}

IntermediateSpec::IntermediateSpec(const ChannelParams& params_, double p_base_, double p_star_)
    : params(params_), p_base(p_base_), p_star(p_star_) {
    if (!(0.0 <= p_base && p_base <= p_star && p_star <= 1.0))
        throw std::invalid_argument("IntermediateSpec: need 0 <= p_base <= p_star <= 1");
}

double IntermediateSpec::ratio() const {
    const double g_base = coherence_factor(params, p_base);
    if (std::abs(g_base) <= kSingularTol)
        throw std::domain_error("IntermediateSpec: channel non-invertible at p_base");
    return coherence_factor(params, p_star) / g_base;
}

bool IntermediateSpec::singular_base() const {
    return std::abs(coherence_factor(params, p_base)) <= kSingularTol;
}

bool IntermediateSpec::ill_conditioned() const {
    const double g = std::abs(coherence_factor(params, p_base));
    return g > kSingularTol && g <= kConditioningTol;
}

ChoiMatrix choi_from_kraus(const KrausSet& ks) {
    if (!ks.complete) throw std::invalid_argument("choi_from_kraus: Kraus set is not complete");
    const int n = ks.d * ks.d;
    ComplexMatrix c(n, n);
    for (const auto& k : ks.operators) {
        const ComplexMatrix v = vectorize(k);
        for (int i = 0; i < n; ++i) {
            const Complex vi = v(i, 0);
            if (vi == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) c(i, j) += vi * std::conj(v(j, 0));
        }
    }
    return ChoiMatrix(ks.d, std::move(c));
}

ComplexMatrix superop_from_kraus(const KrausSet& ks) {
    const int n = ks.d * ks.d;
    ComplexMatrix e(n, n);
    for (const auto& k : ks.operators) e += kron(k, k.conjugate());
    return e;
}

ComplexMatrix superop_divide(const ComplexMatrix& numer, const ComplexMatrix& denom) {
    if (numer.rows() != denom.rows() || numer.cols() != denom.cols() || !numer.is_square())
        throw std::invalid_argument("superop_divide: shape mismatch");
    const int n = numer.rows();
    const double scale = std::max(1.0, denom.max_abs());
    if (numer.is_diagonal(1e-14 * scale) && denom.is_diagonal(1e-14 * scale)) {
        ComplexMatrix out(n, n);
        for (int i = 0; i < n; ++i) {
            const Complex d = denom(i, i);
            if (std::abs(d) <= kSingularTol)
                throw std::domain_error("superop_divide: non-invertible superoperator");
            out(i, i) = numer(i, i) / d;
        }
        return out;
    }
    return numer * inverse(denom);
}

ChoiMatrix intermediate_choi(const IntermediateSpec& spec) {
    const int d = spec.params.d;
    const double r = spec.ratio();
    ComplexMatrix c(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) c(i * d + i, j * d + j) = (i == j) ? 1.0 : r;
    return ChoiMatrix(d, std::move(c));
}

ChoiMatrix intermediate_choi_numeric(const IntermediateSpec& spec) {
    if (spec.singular_base())
        throw std::domain_error("intermediate_choi_numeric: channel non-invertible at p_base");
    const ComplexMatrix e_star = superop_from_kraus(kraus_diagonal_weyl(spec.params, spec.p_star));
    const ComplexMatrix e_base = superop_from_kraus(kraus_diagonal_weyl(spec.params, spec.p_base));
    return ChoiMatrix(spec.params.d, reshuffle(superop_divide(e_star, e_base)));
}

Spectrum intermediate_eigs(const IntermediateSpec& spec) {
    const int d = spec.params.d;
    const double r = spec.ratio();
    Spectrum s;
    s.eigenvalues.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    s.eigenvalues.push_back(1.0 + (d - 1.0) * r);
    for (int i = 1; i < d; ++i) s.eigenvalues.push_back(1.0 - r);
    for (int i = 0; i < d * (d - 1); ++i) s.eigenvalues.push_back(0.0);
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
    return s;
}

CpTest is_cp(const IntermediateSpec& spec, double tol) {
    const Spectrum s = intermediate_eigs(spec);
    return CpTest{s.min() >= -tol, s.min()};
}

ComplexMatrix apply_intermediate(const IntermediateSpec& spec, const ComplexMatrix& m) {
    if (m.rows() != spec.params.d || m.cols() != spec.params.d)
        throw std::invalid_argument("apply_intermediate: dimension mismatch");
    const double r = spec.ratio();
    ComplexMatrix out = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j) out(i, j) *= r;
    return out;
}

DensityMatrix apply_intermediate(const IntermediateSpec& spec, const DensityMatrix& rho) {
    return DensityMatrix(apply_intermediate(spec, rho.matrix()));
}

double rhp_witness(const ChannelParams& params, double p, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("rhp_witness: eps must be positive");
    if (p < 0.0 || p + eps > 1.0) throw std::domain_error("rhp_witness: [p, p+eps] must lie in [0, 1]");
    const IntermediateSpec spec(params, p, p + eps);
    if (spec.singular_base()) throw std::domain_error("rhp_witness: evaluation at the singular point");
    const Spectrum s = intermediate_eigs(spec);
    double abs_sum = 0.0;
    for (double v : s.eigenvalues) abs_sum += std::abs(v);
    return (abs_sum / params.d - 1.0) / eps;
}

double rhp_witness_limit(const ChannelParams& params, double p) {
    const double g = coherence_factor(params, p);
    if (std::abs(g) <= kSingularTol) throw std::domain_error("rhp_witness_limit: evaluation at the singular point");
    const double d = params.d;
    const double neg_rate = coherence_factor_derivative(params, p) / (d * g);  // -gamma(p)
    return 2.0 * (d - 1.0) * std::max(0.0, neg_rate);
}

RhpIntegral rhp_integral(const ChannelParams& params, double delta, double abs_tol) {
    if (!(delta > 0.0)) throw std::invalid_argument("rhp_integral: delta must be positive");
    RhpIntegral out{0.0, delta, 0.0, false};
    if (params.alpha <= 0.0) return out;

    const double root = singular_point(params);
    const auto witness = [&params](double p) { return rhp_witness_limit(params, p); };
    // The witness vanishes below the root, so only the upper side of the
    // excised window contributes.
    const double lo = root + delta;
    if (lo >= 1.0) {
        out.divergent = root < 1.0;
        return out;
    }
    out.value = adaptive_simpson(witness, lo, 1.0, abs_tol);
    out.divergent = true;
    const double lo2 = std::min(1.0, root + 2.0 * delta);
    out.sensitivity = adaptive_simpson(witness, lo, lo2, abs_tol);
    return out;
}

}  // namespace weylchan
